#ifndef COXMUT_SCHREIER_SIMS_HPP
#define COXMUT_SCHREIER_SIMS_HPP

// Stabilizer chains. A random Schreier-Sims phase builds a candidate chain;
// a deterministic pass then sifts every Schreier generator at every level,
// so the returned order is exact.

#include "errors.hpp"
#include "perm.hpp"

#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

namespace coxmut {

struct GroupOrderResult {
    std::optional<BigInt> order;
    std::size_t cap = 0; ///< the cap that was hit when order is empty

    bool exact() const { return order.has_value(); }
    static GroupOrderResult exceeds(std::size_t cap) { return {std::nullopt, cap}; }
};

class StabilizerChain {
public:
    /// `max_strong_generators` guards memory; exceeding it throws CapExceeded.
    StabilizerChain(std::size_t degree, const std::vector<Perm>& gens, std::size_t max_strong_generators = 4096,
                    std::uint32_t seed = 0x5eed)
        : degree_(degree), max_strong_(max_strong_generators), rng_(seed)
    {
        for (const auto& g : gens) {
            if (g.degree() != degree) throw std::invalid_argument("permutation degree mismatch");
            if (!g.is_identity()) input_.push_back(g);
        }
        if (input_.empty()) return;
        random_phase();
        while (!verify()) {
        }
    }

    BigInt order() const
    {
        BigInt o = 1;
        for (const auto& l : levels_) o *= static_cast<unsigned long>(l.orbit.size());
        return o;
    }

    std::vector<Point> base() const
    {
        std::vector<Point> b;
        for (const auto& l : levels_) b.push_back(l.base);
        return b;
    }

    bool contains(const Perm& g) const { return sift(g).first.is_identity(); }

private:
    struct Level {
        Point base = 0;
        std::vector<std::size_t> gens;  ///< indices into strong_
        std::vector<Point> orbit;
        std::vector<int> rep_index;     ///< per point: index into reps, -1 if not in orbit
        std::vector<Perm> reps;         ///< reps[k](base) = orbit[k]
        std::vector<Perm> reps_inv;
    };

    void add_strong(Perm g, std::size_t from_level)
    {
        if (strong_.size() >= max_strong_) throw CapExceeded("stabilizer chain: too many strong generators");
        // g fixes the base points of levels < from_level.
        if (from_level == levels_.size()) {
            Point moved = 0;
            while (g(moved) == moved) ++moved;
            Level l;
            l.base = moved;
            levels_.push_back(std::move(l));
        }
        strong_.push_back(std::move(g));
        for (std::size_t i = 0; i <= from_level; ++i) {
            levels_[i].gens.push_back(strong_.size() - 1);
            rebuild_orbit(levels_[i]);
        }
    }

    void rebuild_orbit(Level& l) const
    {
        l.orbit.assign(1, l.base);
        l.rep_index.assign(degree_, -1);
        l.reps.assign(1, Perm(degree_));
        l.reps_inv.assign(1, Perm(degree_));
        l.rep_index[l.base] = 0;
        for (std::size_t q = 0; q < l.orbit.size(); ++q)
            for (std::size_t gi : l.gens) {
                const Perm& s = strong_[gi];
                const Point img = s(l.orbit[q]);
                if (l.rep_index[img] >= 0) continue;
                l.rep_index[img] = static_cast<int>(l.orbit.size());
                l.orbit.push_back(img);
                Perm r = s * l.reps[q];
                l.reps_inv.push_back(r.inverse());
                l.reps.push_back(std::move(r));
            }
    }

    /// Residue of g and the first level where sifting stopped.
    std::pair<Perm, std::size_t> sift(Perm g, std::size_t start = 0) const
    {
        for (std::size_t i = start; i < levels_.size(); ++i) {
            const auto& l = levels_[i];
            const int k = l.rep_index[g(l.base)];
            if (k < 0) return {std::move(g), i};
            g = l.reps_inv[static_cast<std::size_t>(k)] * g;
        }
        return {std::move(g), levels_.size()};
    }

    Perm random_element()
    {
        // Product replacement on a small pool seeded with the input generators.
        if (pool_.empty()) {
            pool_ = input_;
            while (pool_.size() < 10) pool_.push_back(input_[pool_.size() % input_.size()]);
            accumulator_ = Perm(degree_);
            for (int i = 0; i < 50; ++i) random_element();
        }
        std::uniform_int_distribution<std::size_t> pick(0, pool_.size() - 1);
        std::size_t a = pick(rng_), b = pick(rng_);
        while (b == a) b = pick(rng_);
        pool_[a] = (rng_() & 1) ? pool_[a] * pool_[b] : pool_[b] * pool_[a];
        accumulator_ = accumulator_ * pool_[a];
        return accumulator_;
    }

    void random_phase()
    {
        for (const auto& g : input_) {
            auto [h, lvl] = sift(g);
            if (!h.is_identity()) add_strong(std::move(h), lvl);
        }
        int quiet = 0;
        while (quiet < 40) {
            auto [h, lvl] = sift(random_element());
            if (h.is_identity()) {
                ++quiet;
                continue;
            }
            quiet = 0;
            add_strong(std::move(h), lvl);
        }
    }

    /// True when every Schreier generator sifts; otherwise adds one residue.
    bool verify()
    {
        for (std::size_t i = levels_.size(); i-- > 0;) {
            const Level& l = levels_[i];
            for (std::size_t k = 0; k < l.orbit.size(); ++k)
                for (std::size_t gi : l.gens) {
                    const Perm& s = strong_[gi];
                    const int j = l.rep_index[s(l.orbit[k])];
                    Perm sg = l.reps_inv[static_cast<std::size_t>(j)] * (s * l.reps[k]);
                    if (sg.is_identity()) continue;
                    auto [h, lvl] = sift(std::move(sg), i + 1);
                    if (!h.is_identity()) {
                        add_strong(std::move(h), lvl);
                        return false;
                    }
                }
        }
        return true;
    }

    std::size_t degree_;
    std::size_t max_strong_;
    std::mt19937 rng_;
    std::vector<Perm> input_;
    std::vector<Perm> strong_;
    std::vector<Level> levels_;
    std::vector<Perm> pool_;
    Perm accumulator_;
};

/// Order of the group generated by `gens` (all of degree `degree`).
inline GroupOrderResult group_order(std::size_t degree, const std::vector<Perm>& gens, std::size_t cap = 4096)
{
    try {
        return {StabilizerChain(degree, gens, cap).order(), 0};
    } catch (const CapExceeded&) {
        return GroupOrderResult::exceeds(cap);
    }
}

} // namespace coxmut

#endif // COXMUT_SCHREIER_SIMS_HPP
