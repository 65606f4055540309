#pragma once

// Enumeration and counting of canonical monomials and one-hole contexts by
// multidegree.

#include "nilalg/monomial.hpp"
#include "nilalg/rational.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <vector>

namespace nilalg {

/// Calls fn(sub) for every sub-multidegree 0 <= sub <= d, in odometer order.
template <typename Fn>
void for_each_sub_multidegree(const Multidegree &d, Fn &&fn) {
    Multidegree sub(d.size());
    for (;;) {
        fn(static_cast<const Multidegree &>(sub));
        std::size_t i = 0;
        while (i < d.size() && sub[i] == d[i]) {
            sub[i] = 0;
            ++i;
        }
        if (i == d.size())
            return;
        ++sub[i];
    }
}

/// All multidegrees on `nvars` variables with the given total degree,
/// in increasing lexicographic order.
inline std::vector<Multidegree> multidegrees_of_total(std::size_t nvars, int total) {
    std::vector<Multidegree> out;
    if (nvars == 0)
        return out;
    Multidegree d(nvars);
    auto rec = [&](auto &self, std::size_t i, int left) -> void {
        if (i + 1 == nvars) {
            d[i] = left;
            out.push_back(d);
            return;
        }
        for (int e = 0; e <= left; ++e) {
            d[i] = e;
            self(self, i + 1, left - e);
        }
    };
    rec(rec, 0, total);
    std::sort(out.begin(), out.end());
    return out;
}

/// Memoizing enumerator; not thread-safe, create one per thread.
class MonomialEnumerator {
public:
    explicit MonomialEnumerator(std::size_t nvars) : nvars_(nvars) {}

    std::size_t nvars() const noexcept { return nvars_; }

    /// Every canonical monomial of multidegree d, sorted by the monomial order.
    const std::vector<Monomial> &enumerate(const Multidegree &d) {
        check(d);
        if (auto it = monomials_.find(d); it != monomials_.end())
            return it->second;
        std::vector<Monomial> out;
        const int total = d.total();
        if (total == 1) {
            for (std::size_t v = 0; v < nvars_; ++v)
                if (d[v] == 1)
                    out.push_back(Monomial::leaf(static_cast<VarId>(v)));
        } else if (total > 1) {
            for_each_sub_multidegree(d, [&](const Multidegree &d1) {
                if (d1.is_zero() || d1 == d)
                    return;
                Multidegree d2 = d - d1;
                if (d2 < d1)
                    return;
                const auto &left = enumerate(d1);
                const auto &right = enumerate(d2);
                for (std::size_t i = 0; i < left.size(); ++i)
                    for (std::size_t j = (d1 == d2 ? i : 0); j < right.size(); ++j)
                        out.push_back(product(left[i], right[j]));
            });
            std::sort(out.begin(), out.end());
        }
        return monomials_.emplace(d, std::move(out)).first->second;
    }

    /// Number of canonical monomials of multidegree d via the pair recurrence.
    Integer count(const Multidegree &d) {
        check(d);
        if (auto it = counts_.find(d); it != counts_.end())
            return it->second;
        Integer c(0);
        const int total = d.total();
        if (total == 1) {
            c = 1;
        } else if (total > 1) {
            for_each_sub_multidegree(d, [&](const Multidegree &d1) {
                if (d1.is_zero() || d1 == d)
                    return;
                Multidegree d2 = d - d1;
                if (d2 < d1)
                    return;
                Integer c1 = count(d1);
                if (d1 == d2)
                    c += c1 * (c1 + 1) / 2;
                else
                    c += c1 * count(d2);
            });
        }
        counts_.emplace(d, c);
        return c;
    }

    /// Every one-hole context whose variable part has multidegree d
    /// (the bare hole when d = 0).
    const std::vector<Context> &contexts(const Multidegree &d) {
        check(d);
        if (auto it = contexts_.find(d); it != contexts_.end())
            return it->second;
        std::vector<Context> out;
        if (d.is_zero()) {
            out.push_back(Context{});
        } else {
            for_each_sub_multidegree(d, [&](const Multidegree &d1) {
                if (d1.is_zero())
                    return;
                const auto &heads = enumerate(d1);
                const auto &tails = contexts(d - d1);
                for (auto &h : heads)
                    for (auto &t : tails) {
                        Context c;
                        c.siblings.reserve(t.siblings.size() + 1);
                        c.siblings.push_back(h);
                        c.siblings.insert(c.siblings.end(), t.siblings.begin(), t.siblings.end());
                        out.push_back(std::move(c));
                    }
            });
        }
        return contexts_.emplace(d, std::move(out)).first->second;
    }

private:
    void check(const Multidegree &d) const {
        if (d.size() != nvars_)
            throw std::invalid_argument("multidegree " + d.str() + " does not match " + std::to_string(nvars_) +
                                        " variables");
        for (std::size_t i = 0; i < d.size(); ++i)
            if (d[i] < 0)
                throw std::invalid_argument("negative multidegree " + d.str());
    }

    std::size_t nvars_;
    std::map<Multidegree, std::vector<Monomial>> monomials_;
    std::map<Multidegree, Integer> counts_;
    std::map<Multidegree, std::vector<Context>> contexts_;
};

inline std::vector<Monomial> enumerate(const Multidegree &d) {
    if (d.total() < 1)
        throw std::invalid_argument("enumerate: total degree must be at least 1");
    MonomialEnumerator e(d.size());
    return e.enumerate(d);
}

inline Integer count(const Multidegree &d) {
    if (d.total() < 1)
        throw std::invalid_argument("count: total degree must be at least 1");
    MonomialEnumerator e(d.size());
    return e.count(d);
}

inline std::vector<Context> enumerate_contexts(const Multidegree &d) {
    MonomialEnumerator e(d.size());
    return e.contexts(d);
}

/// Number of monomials of total degree `degree` on k generators.
inline Integer count_by_degree(int degree, int k) {
    if (degree < 1 || k < 1)
        throw std::invalid_argument("count_by_degree: degree and k must be positive");
    std::vector<Integer> t(static_cast<std::size_t>(degree) + 1);
    t[1] = k;
    for (int n = 2; n <= degree; ++n) {
        Integer c(0);
        for (int i = 1; 2 * i <= n; ++i) {
            const Integer &a = t[static_cast<std::size_t>(i)];
            if (2 * i == n)
                c += a * (a + 1) / 2;
            else
                c += a * t[static_cast<std::size_t>(n - i)];
        }
        t[static_cast<std::size_t>(n)] = c;
    }
    return t[static_cast<std::size_t>(degree)];
}

/// dim[n,k]: number of monomials of degree < n on k generators.
inline Integer dim_less_than(int n, int k) {
    if (n < 2 || k < 1)
        throw std::invalid_argument("dim_less_than: requires n >= 2 and k >= 1");
    Integer s(0);
    for (int d = 1; d < n; ++d)
        s += count_by_degree(d, k);
    return s;
}

} // namespace nilalg
