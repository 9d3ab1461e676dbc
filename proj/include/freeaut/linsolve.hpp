#pragma once

#include <map>
#include <optional>
#include <vector>

#include "freeaut/rational.hpp"

namespace freeaut {

// Exact incremental span membership over sparse rational vectors keyed by an
// ordered monomial type. Rows are kept in echelon form, pivot = largest key,
// and each row remembers the combination of the originally added vectors
// that produced it, so solve() can return certificate coefficients.
template <class Key>
class SpanSolver {
public:
    using Vec = std::map<Key, Rational>;

    // Returns true when the vector enlarged the span.
    bool add(Vec v) {
        std::vector<Rational> acc(count_);
        reduce(v, acc);
        // v_in = v + sum acc_i * orig_i, so v = orig_new - sum acc_i * orig_i.
        std::vector<Rational> combo(count_ + 1);
        for (int i = 0; i < count_; ++i) combo[i] = -acc[i];
        combo[count_] = Rational(1);
        ++count_;
        if (v.empty()) return false;
        normalize(v, combo);
        Key pivot = largest_key(v);
        rows_.emplace(std::move(pivot), Row{std::move(v), std::move(combo)});
        return true;
    }

    // Coefficients c with sum c_i * vector_i == target, if target is in the span.
    std::optional<std::vector<Rational>> solve(Vec target) const {
        std::vector<Rational> acc(count_);
        reduce(target, acc);
        if (!target.empty()) return std::nullopt;
        return acc;
    }

    bool contains(Vec target) const {
        std::vector<Rational> acc(count_);
        reduce(target, acc);
        return target.empty();
    }

    int rank() const { return static_cast<int>(rows_.size()); }
    int added() const { return count_; }

private:
    struct Row {
        Vec vec;               // pivot coefficient normalized to 1
        std::vector<Rational> combo;
    };

    static Key largest_key(const Vec& v) { return v.rbegin()->first; }

    static void axpy(Vec& v, const Rational& c, const Vec& w) {
        for (const auto& [k, a] : w) {
            auto it = v.find(k);
            if (it == v.end()) {
                if (!(c * a).is_zero()) v.emplace(k, c * a);
            } else {
                it->second += c * a;
                if (it->second.is_zero()) v.erase(it);
            }
        }
    }

    // Eliminates pivots of v against the echelon rows. On return,
    // v_in == v_out + sum acc_i * orig_i.
    void reduce(Vec& v, std::vector<Rational>& acc) const {
        while (!v.empty()) {
            auto it = rows_.find(largest_key(v));
            if (it == rows_.end()) return;
            Rational c = v.rbegin()->second;
            axpy(v, -c, it->second.vec);
            const auto& combo = it->second.combo;
            for (size_t i = 0; i < combo.size(); ++i) acc[i] += c * combo[i];
        }
    }

    static void normalize(Vec& v, std::vector<Rational>& combo) {
        Rational lead = v.rbegin()->second;
        if (lead.is_one()) return;
        Rational inv = lead.inverse();
        for (auto& [k, a] : v) a *= inv;
        for (auto& a : combo) a *= inv;
    }

    std::map<Key, Row> rows_;
    int count_ = 0;
};

} // namespace freeaut
