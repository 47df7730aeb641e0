#include "weakhopf/report.hpp"

#include "weakhopf/errors.hpp"

#include <algorithm>

namespace weakhopf {

std::string to_string(Status s) {
    switch (s) {
        case Status::pass: return "pass";
        case Status::fail: return "fail";
        case Status::skipped: return "skipped";
    }
    return "?";
}

void VerdictReport::add(VerdictEntry e) {
    if (find(e.id)) throw Error("duplicate check id '" + e.id + "'");
    entries_.push_back(std::move(e));
}

void VerdictReport::pass(const std::string& id, std::string note) {
    add({id, Status::pass, std::nullopt, std::move(note)});
}

void VerdictReport::fail(const std::string& id, std::string note) {
    add({id, Status::fail, std::nullopt, std::move(note)});
}

void VerdictReport::skip(const std::string& id, std::string note) {
    add({id, Status::skipped, std::nullopt, std::move(note)});
}

void VerdictReport::expect(const std::string& id, bool cond, std::string note) {
    add({id, cond ? Status::pass : Status::fail, std::nullopt, std::move(note)});
}

std::optional<Witness> witness_of(const LinMap& a, const LinMap& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw ShapeError("comparing maps of different shapes");
    auto d = first_difference(a, b);
    if (!d) return std::nullopt;
    return Witness{d->row, d->col, d->lhs.to_string(), d->rhs.to_string()};
}

void VerdictReport::compare(const std::string& id, const LinMap& a, const LinMap& b) {
    auto w = witness_of(a, b);
    add({id, w ? Status::fail : Status::pass, w, {}});
}

void VerdictReport::merge(const VerdictReport& other, const std::string& prefix) {
    for (auto e : other.entries_) {
        if (!prefix.empty()) e.id = prefix + "." + e.id;
        add(std::move(e));
    }
}

const VerdictEntry* VerdictReport::find(const std::string& id) const {
    for (const auto& e : entries_)
        if (e.id == id) return &e;
    return nullptr;
}

bool VerdictReport::passed(const std::string& id) const {
    auto e = find(id);
    return e && e->status == Status::pass;
}

bool VerdictReport::ok() const { return first_failure() == nullptr; }

const VerdictEntry* VerdictReport::first_failure() const {
    for (const auto& e : entries_)
        if (e.status == Status::fail) return &e;
    return nullptr;
}

std::size_t VerdictReport::count(Status s) const {
    return std::count_if(entries_.begin(), entries_.end(), [s](const VerdictEntry& e) { return e.status == s; });
}

}  // namespace weakhopf
