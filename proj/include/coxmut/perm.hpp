#ifndef COXMUT_PERM_HPP
#define COXMUT_PERM_HPP

// Permutations of {0, ..., degree-1}. Composition is right-to-left:
// (a * b)(x) = a(b(x)).

#include "bigint.hpp"

#include <cstdint>
#include <numeric>
#include <vector>

namespace coxmut {

using Point = std::uint32_t;

class Perm {
public:
    Perm() = default;
    explicit Perm(std::size_t degree) : img_(degree) { std::iota(img_.begin(), img_.end(), Point{0}); }
    explicit Perm(std::vector<Point> images) : img_(std::move(images)) {}

    std::size_t degree() const noexcept { return img_.size(); }
    Point operator()(Point x) const { return img_[x]; }
    const std::vector<Point>& images() const noexcept { return img_; }

    bool is_identity() const
    {
        for (std::size_t i = 0; i < img_.size(); ++i)
            if (img_[i] != i) return false;
        return true;
    }

    Perm inverse() const
    {
        std::vector<Point> out(img_.size());
        for (std::size_t i = 0; i < img_.size(); ++i) out[img_[i]] = static_cast<Point>(i);
        return Perm(std::move(out));
    }

    friend Perm operator*(const Perm& a, const Perm& b)
    {
        std::vector<Point> out(b.img_.size());
        for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.img_[b.img_[i]];
        return Perm(std::move(out));
    }

    /// Order as the lcm of cycle lengths.
    BigInt order() const
    {
        BigInt l = 1;
        std::vector<bool> seen(img_.size(), false);
        for (std::size_t s = 0; s < img_.size(); ++s) {
            if (seen[s]) continue;
            unsigned long len = 0;
            for (std::size_t x = s; !seen[x]; x = img_[x]) {
                seen[x] = true;
                ++len;
            }
            mpz_lcm_ui(l.get_mpz_t(), l.get_mpz_t(), len);
        }
        return l;
    }

    friend bool operator==(const Perm&, const Perm&) = default;

private:
    std::vector<Point> img_;
};

} // namespace coxmut

#endif // COXMUT_PERM_HPP
