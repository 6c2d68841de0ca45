#pragma once

#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace lieva {

// Exponent vector of a monomial in t1..tn. Compared in graded lexicographic
// order: total degree first, then lexicographic on the exponents, which makes
// map iteration (and therefore printing and serialization) deterministic.
class MultiIndex {
public:
    explicit MultiIndex(std::size_t nvars) : e_(nvars, 0) {}
    MultiIndex(std::initializer_list<std::uint32_t> e) : e_(e) {}
    explicit MultiIndex(std::vector<std::uint32_t> e) : e_(std::move(e)) {}

    static MultiIndex unit(std::size_t nvars, std::size_t var) {
        MultiIndex m(nvars);
        m.e_.at(var) = 1;
        return m;
    }

    std::size_t nvars() const { return e_.size(); }
    std::uint32_t operator[](std::size_t i) const { return e_[i]; }
    std::uint32_t& operator[](std::size_t i) { return e_[i]; }

    long degree() const {
        long d = 0;
        for (auto e : e_) d += e;
        return d;
    }

    bool is_constant() const { return degree() == 0; }

    MultiIndex operator+(const MultiIndex& o) const {
        same_arity(o);
        MultiIndex r(*this);
        for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
        return r;
    }

    bool divides(const MultiIndex& o) const {
        same_arity(o);
        for (std::size_t i = 0; i < e_.size(); ++i)
            if (e_[i] > o.e_[i]) return false;
        return true;
    }

    // Componentwise difference; caller guarantees divides(o) the other way.
    MultiIndex operator-(const MultiIndex& o) const {
        same_arity(o);
        MultiIndex r(*this);
        for (std::size_t i = 0; i < e_.size(); ++i) {
            if (o.e_[i] > e_[i]) throw std::domain_error("MultiIndex: negative exponent");
            r.e_[i] -= o.e_[i];
        }
        return r;
    }

    bool operator==(const MultiIndex& o) const { return e_ == o.e_; }
    bool operator!=(const MultiIndex& o) const { return !(*this == o); }

    std::string to_string() const {
        std::string s;
        for (std::size_t i = 0; i < e_.size(); ++i) {
            if (e_[i] == 0) continue;
            if (!s.empty()) s += "*";
            s += "t" + std::to_string(i + 1);
            if (e_[i] > 1) s += "^" + std::to_string(e_[i]);
        }
        return s.empty() ? "1" : s;
    }

private:
    void same_arity(const MultiIndex& o) const {
        if (e_.size() != o.e_.size()) throw std::invalid_argument("MultiIndex: arity mismatch");
    }

    std::vector<std::uint32_t> e_;
};

struct GradedLexLess {
    bool operator()(const MultiIndex& a, const MultiIndex& b) const {
        const long da = a.degree(), db = b.degree();
        if (da != db) return da < db;
        for (std::size_t i = 0; i < a.nvars() && i < b.nvars(); ++i)
            if (a[i] != b[i]) return a[i] < b[i];
        return a.nvars() < b.nvars();
    }
};

} // namespace lieva
