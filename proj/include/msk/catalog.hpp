#pragma once

#include "msk/commands.hpp"

namespace msk {

struct CatalogEntry {
    std::string name;
    std::string command;
    jsn input;
    jsn expected;  // frozen report under default flags
};

/// Built-in regression corpus: the worked examples every release must
/// reproduce, each with its frozen expected report.
const std::vector<CatalogEntry>& catalog();

const CatalogEntry* catalog_find(const std::string& name);

struct ReplayResult {
    std::string name;
    bool match = false;
    jsn got;
};

/// Re-run one entry under default flags and compare byte-for-byte.
ReplayResult catalog_replay(const CatalogEntry& entry);

}  // namespace msk
