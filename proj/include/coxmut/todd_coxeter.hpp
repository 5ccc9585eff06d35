#ifndef COXMUT_TODD_COXETER_HPP
#define COXMUT_TODD_COXETER_HPP

// Coset enumeration over the trivial subgroup for presentations with
// involutive generators (HLT strategy, lookahead when the table is full).
// Each generator is its own inverse, so one column per generator suffices.

#include "presentation.hpp"
#include "schreier_sims.hpp"

#include <vector>

namespace coxmut {

namespace detail {

class CosetTable {
public:
    CosetTable(Index gens, std::vector<Word> relators, std::size_t cap)
        : n_(gens), relators_(std::move(relators)), cap_(cap)
    {
        new_coset();
    }

    /// Exact index, or nullopt when the cap could not be respected.
    std::optional<std::size_t> run()
    {
        for (std::size_t a = 0; a < forward_.size(); ++a) {
            if (!alive(a)) continue;
            for (const auto& r : relators_) {
                if (!scan_and_fill(a, r)) return std::nullopt;
                if (!alive(a)) break;
            }
            if (!alive(a)) continue;
            for (Index x = 0; x < n_; ++x)
                if (entry(a, x) < 0 && !define(a, x)) return std::nullopt;
        }
        return live_;
    }

private:
    int& entry(std::size_t c, Index x) { return table_[c * n_ + x]; }
    bool alive(std::size_t c) const { return forward_[c] == static_cast<int>(c); }

    int new_coset()
    {
        const int c = static_cast<int>(forward_.size());
        forward_.push_back(c);
        table_.resize(table_.size() + n_, -1);
        ++live_;
        return c;
    }

    bool define(std::size_t a, Index x)
    {
        if (!has_room()) return false;
        if (!alive(a) || entry(a, x) >= 0) return true;
        const int b = new_coset();
        entry(a, x) = b;
        entry(static_cast<std::size_t>(b), x) = static_cast<int>(a);
        return true;
    }

    // Runs a lookahead when the table is full; false if that did not help.
    bool has_room()
    {
        if (forward_.size() >= 4 * cap_ + 16) return false;
        if (live_ < cap_) return true;
        lookahead();
        return live_ < cap_;
    }

    /// Scans without defining; used to shrink a full table.
    void lookahead()
    {
        for (std::size_t a = 0; a < forward_.size(); ++a)
            for (const auto& r : relators_) {
                if (!alive(a)) break;
                scan(a, r);
            }
    }

    // Returns false when the cap stops the enumeration.
    bool scan_and_fill(std::size_t a, const Word& w)
    {
        const std::size_t len = w.size();
        for (;;) {
            if (!alive(a)) return true;
            int f = static_cast<int>(a), b = static_cast<int>(a);
            std::size_t i = 0, j = len;
            while (i < j && entry(static_cast<std::size_t>(f), w.letters[i]) >= 0)
                f = entry(static_cast<std::size_t>(f), w.letters[i++]);
            if (i == j) {
                if (f != b) coincidence(f, b);
                return true;
            }
            while (j > i && entry(static_cast<std::size_t>(b), w.letters[j - 1]) >= 0)
                b = entry(static_cast<std::size_t>(b), w.letters[--j]);
            if (j == i) {
                coincidence(f, b);
                return true;
            }
            if (j == i + 1) {
                const Index x = w.letters[i];
                entry(static_cast<std::size_t>(f), x) = b;
                entry(static_cast<std::size_t>(b), x) = f;
                return true;
            }
            if (live_ >= cap_) {
                if (!has_room()) return false;
                continue;
            }
            const int c = new_coset();
            entry(static_cast<std::size_t>(f), w.letters[i]) = c;
            entry(static_cast<std::size_t>(c), w.letters[i]) = f;
        }
    }

    void scan(std::size_t a, const Word& w)
    {
        const std::size_t len = w.size();
        int f = static_cast<int>(a), b = static_cast<int>(a);
        std::size_t i = 0, j = len;
        while (i < j && entry(static_cast<std::size_t>(f), w.letters[i]) >= 0)
            f = entry(static_cast<std::size_t>(f), w.letters[i++]);
        if (i == j) {
            if (f != b) coincidence(f, b);
            return;
        }
        while (j > i && entry(static_cast<std::size_t>(b), w.letters[j - 1]) >= 0)
            b = entry(static_cast<std::size_t>(b), w.letters[--j]);
        if (j == i) {
            coincidence(f, b);
        } else if (j == i + 1) {
            const Index x = w.letters[i];
            entry(static_cast<std::size_t>(f), x) = b;
            entry(static_cast<std::size_t>(b), x) = f;
        }
    }

    int rep(int c)
    {
        int r = c;
        while (forward_[static_cast<std::size_t>(r)] != r) r = forward_[static_cast<std::size_t>(r)];
        while (forward_[static_cast<std::size_t>(c)] != r) {
            const int next = forward_[static_cast<std::size_t>(c)];
            forward_[static_cast<std::size_t>(c)] = r;
            c = next;
        }
        return r;
    }

    void merge(int k, int l, std::vector<int>& queue)
    {
        k = rep(k);
        l = rep(l);
        if (k == l) return;
        if (l < k) std::swap(k, l);
        forward_[static_cast<std::size_t>(l)] = k;
        --live_;
        queue.push_back(l);
    }

    void coincidence(int a, int b)
    {
        std::vector<int> queue;
        merge(a, b, queue);
        for (std::size_t q = 0; q < queue.size(); ++q) {
            const auto e = static_cast<std::size_t>(queue[q]);
            for (Index x = 0; x < n_; ++x) {
                const int g = entry(e, x);
                if (g < 0) continue;
                entry(static_cast<std::size_t>(g), x) = -1;
                entry(e, x) = -1;
                const int mu = rep(static_cast<int>(e));
                const int nu = rep(g);
                if (entry(static_cast<std::size_t>(mu), x) >= 0) {
                    merge(nu, entry(static_cast<std::size_t>(mu), x), queue);
                } else if (entry(static_cast<std::size_t>(nu), x) >= 0) {
                    merge(mu, entry(static_cast<std::size_t>(nu), x), queue);
                } else {
                    entry(static_cast<std::size_t>(mu), x) = nu;
                    entry(static_cast<std::size_t>(nu), x) = mu;
                }
            }
        }
    }

    Index n_;
    std::vector<Word> relators_;
    std::size_t cap_;
    std::vector<int> table_;
    std::vector<int> forward_;
    std::size_t live_ = 0;
};

} // namespace detail

/// Order of the group presented by P, by enumerating cosets of the trivial
/// subgroup. `cap` bounds the number of live cosets.
inline GroupOrderResult todd_coxeter(const Presentation& p, std::size_t cap = 1000000)
{
    std::vector<Word> rels;
    for (auto& w : p.relator_words()) {
        Word r = w.reduced();
        // Generator squares hold by construction of the involutive table.
        if (!r.empty()) rels.push_back(std::move(r));
    }
    detail::CosetTable t(p.n_generators, std::move(rels), cap);
    const auto idx = t.run();
    if (!idx) return GroupOrderResult::exceeds(cap);
    return {BigInt(static_cast<unsigned long>(*idx)), 0};
}

} // namespace coxmut

#endif // COXMUT_TODD_COXETER_HPP
