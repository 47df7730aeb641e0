#pragma once

#include "weakhopf/linalg.hpp"

#include <optional>
#include <string>
#include <vector>

namespace weakhopf {

enum class Status { pass, fail, skipped };

std::string to_string(Status s);

struct Witness {
    Index row = 0;
    Index col = 0;
    std::string lhs;
    std::string rhs;
};

struct VerdictEntry {
    std::string id;
    Status status = Status::pass;
    std::optional<Witness> witness;
    std::string note;
};

class VerdictReport {
public:
    /// Throws Error on a duplicate id.
    void add(VerdictEntry e);
    void pass(const std::string& id, std::string note = {});
    void fail(const std::string& id, std::string note = {});
    void skip(const std::string& id, std::string note = {});
    /// Pass iff cond.
    void expect(const std::string& id, bool cond, std::string note = {});
    /// Pass iff a == b entrywise; otherwise records the first differing entry.
    void compare(const std::string& id, const LinMap& a, const LinMap& b);

    /// Appends all entries of other, with ids prefixed by "prefix.".
    void merge(const VerdictReport& other, const std::string& prefix = {});

    const std::vector<VerdictEntry>& entries() const { return entries_; }
    const VerdictEntry* find(const std::string& id) const;
    bool passed(const std::string& id) const;
    /// No entry failed (skipped entries are not failures).
    bool ok() const;
    const VerdictEntry* first_failure() const;
    std::size_t count(Status s) const;

private:
    std::vector<VerdictEntry> entries_;
};

std::optional<Witness> witness_of(const LinMap& a, const LinMap& b);

}  // namespace weakhopf
