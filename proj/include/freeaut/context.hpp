#pragma once

#include <initializer_list>
#include <memory>
#include <string>
#include <vector>

#include "freeaut/error.hpp"

namespace freeaut {

// Ordered variable alphabet. A context is an explicit value; two contexts
// are compatible when they list the same names in the same order.
struct VarContext {
    std::vector<std::string> names;

    int size() const { return static_cast<int>(names.size()); }

    int find(const std::string& name) const {
        for (int i = 0; i < size(); ++i)
            if (names[i] == name) return i;
        return -1;
    }

    int index_of(const std::string& name) const {
        int i = find(name);
        if (i < 0) raise(Errc::BadInput, "unknown variable: " + name);
        return i;
    }

    friend bool operator==(const VarContext& a, const VarContext& b) { return a.names == b.names; }
};

using Ctx = std::shared_ptr<const VarContext>;

inline Ctx make_ctx(std::vector<std::string> names) {
    for (size_t i = 0; i < names.size(); ++i)
        for (size_t j = i + 1; j < names.size(); ++j)
            if (names[i] == names[j]) raise(Errc::BadInput, "duplicate variable name: " + names[i]);
    auto c = std::make_shared<VarContext>();
    c->names = std::move(names);
    return c;
}

inline bool same_ctx(const Ctx& a, const Ctx& b) { return a == b || (a && b && *a == *b); }

inline void require_same_ctx(const Ctx& a, const Ctx& b) {
    if (!same_ctx(a, b)) raise(Errc::ContextMismatch, "operands come from different variable contexts");
}

} // namespace freeaut
