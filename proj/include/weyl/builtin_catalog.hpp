#pragma once

#include "weyl/catalog.hpp"
#include "weyl/rank2_table_data.hpp"

namespace weyl {

/// The rank 2 table shipped in data/rank2_table.json, rows 1-16.
inline const Catalog& builtin_catalog() {
    static const Catalog catalog = parse_catalog(data::rank2_table_json);
    return catalog;
}

} // namespace weyl
