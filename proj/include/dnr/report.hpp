#pragma once

#include <string>
#include <vector>

#include "dnr/sparse.hpp"

namespace dnr {

struct CheckItem {
    std::string id;           // relation identifier, e.g. "serre+[1,2]"
    bool ok = false;
    std::string witness;      // first differing entry when failed, empty otherwise
};

struct CheckReport {
    std::vector<CheckItem> items;

    bool all_ok() const {
        for (const auto& it : items)
            if (!it.ok) return false;
        return true;
    }
    const CheckItem* first_failure() const {
        for (const auto& it : items)
            if (!it.ok) return &it;
        return nullptr;
    }
    void merge(const CheckReport& o) { items.insert(items.end(), o.items.begin(), o.items.end()); }
};

// Record exact equality of two polynomial matrices under the given id; the
// witness names the first entry (in row-major order) where they differ.
inline void check_equal(CheckReport& rep, std::string id, const PolyMatrix& lhs,
                        const PolyMatrix& rhs) {
    PolyMatrix diff = lhs - rhs;
    CheckItem item{std::move(id), diff.is_zero(), ""};
    if (!item.ok) {
        const auto& [rc, p] = *diff.entries().begin();
        item.witness = "entry (" + std::to_string(rc.first) + "," + std::to_string(rc.second) +
                       "): lhs-rhs = " + p.text();
    }
    rep.items.push_back(std::move(item));
}

}  // namespace dnr
