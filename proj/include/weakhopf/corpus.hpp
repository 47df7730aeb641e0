#pragma once

#include "weakhopf/ir.hpp"
#include "weakhopf/report.hpp"

#include <string>
#include <vector>

namespace weakhopf {

struct IdentityDef {
    std::string id;
    std::string lhs;
    std::string rhs;
    bool needs_antipode = false;
};

/// A named group of identities sharing one set of generator names.
struct IdentityTable {
    std::string name;
    std::vector<IdentityDef> items;
};

/// All tables, in a fixed order.
const std::vector<IdentityTable>& identity_corpus();
/// Throws Error for an unknown table name.
const IdentityTable& identity_table(const std::string& name);
/// Looks up "table/id" or a bare id (first match); returns nullptr if absent.
const IdentityDef* find_identity(const std::string& key);

/// Checks each identity in env; S-dependent ones are skipped when has_antipode is false.
void run_table(VerdictReport& report, const IdentityTable& table, const Env& env, bool has_antipode = true);

}  // namespace weakhopf
