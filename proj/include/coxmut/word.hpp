#ifndef COXMUT_WORD_HPP
#define COXMUT_WORD_HPP

#include "exchange.hpp"

#include <initializer_list>
#include <string>
#include <vector>

namespace coxmut {

/// Word in involutive generators; the inverse of a word is its reverse.
struct Word {
    std::vector<Index> letters;

    Word() = default;
    Word(std::initializer_list<Index> l) : letters(l) {}
    explicit Word(std::vector<Index> l) : letters(std::move(l)) {}

    static Word generator(Index i) { return Word{i}; }

    std::size_t size() const noexcept { return letters.size(); }
    bool empty() const noexcept { return letters.empty(); }
    auto begin() const noexcept { return letters.begin(); }
    auto end() const noexcept { return letters.end(); }

    Word inverse() const { return Word(std::vector<Index>(letters.rbegin(), letters.rend())); }

    /// Cancels adjacent equal letters until none remain.
    Word reduced() const
    {
        std::vector<Index> out;
        out.reserve(letters.size());
        for (Index x : letters) {
            if (!out.empty() && out.back() == x)
                out.pop_back();
            else
                out.push_back(x);
        }
        return Word(std::move(out));
    }

    Word power(unsigned k) const
    {
        Word out;
        out.letters.reserve(letters.size() * k);
        for (unsigned i = 0; i < k; ++i) out.letters.insert(out.letters.end(), letters.begin(), letters.end());
        return out;
    }

    friend Word operator*(const Word& a, const Word& b)
    {
        Word out = a;
        out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
        return out;
    }

    /// "s2 s1 s2" style, 1-based; "e" for the empty word.
    std::string to_string(const std::string& symbol = "s") const
    {
        if (letters.empty()) return "e";
        std::string out;
        for (Index x : letters) {
            if (!out.empty()) out += ' ';
            out += symbol + std::to_string(x + 1);
        }
        return out;
    }

    friend auto operator<=>(const Word&, const Word&) = default;
};

} // namespace coxmut

#endif // COXMUT_WORD_HPP
