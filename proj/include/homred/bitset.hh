/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef HOMRED_GUARD_BITSET_HH
#define HOMRED_GUARD_BITSET_HH 1

#include <bit>
#include <cstdint>
#include <vector>

namespace homred
{
    /**
     * Fixed-width bitset sized at runtime, used for domains and adjacency
     * rows. All binary operations assume both operands have the same width.
     */
    class Bitset
    {
        private:
            using Word = std::uint64_t;
            static constexpr int bits_per_word = 64;

            int _size = 0;
            std::vector<Word> _words;

        public:
            static constexpr int npos = -1;

            Bitset() = default;

            explicit Bitset(int size, bool value = false) :
                _size(size),
                _words((size + bits_per_word - 1) / bits_per_word, value ? ~Word{ 0 } : Word{ 0 })
            {
                if (value)
                    trim();
            }

            auto size() const -> int { return _size; }

            /// The underlying words, lowest bits first; bits past size() are always zero.
            auto words() const -> const std::vector<Word> & { return _words; }

            auto test(int i) const -> bool
            {
                return (_words[i / bits_per_word] >> (i % bits_per_word)) & 1;
            }

            auto set(int i) -> void
            {
                _words[i / bits_per_word] |= Word{ 1 } << (i % bits_per_word);
            }

            auto reset(int i) -> void
            {
                _words[i / bits_per_word] &= ~(Word{ 1 } << (i % bits_per_word));
            }

            auto reset() -> void
            {
                for (auto & w : _words)
                    w = 0;
            }

            auto count() const -> int
            {
                int result = 0;
                for (auto w : _words)
                    result += std::popcount(w);
                return result;
            }

            auto none() const -> bool
            {
                for (auto w : _words)
                    if (w)
                        return false;
                return true;
            }

            auto any() const -> bool { return ! none(); }

            auto find_first() const -> int
            {
                return find_from_word(0);
            }

            /// First set bit strictly after i, or npos.
            auto find_next(int i) const -> int
            {
                ++i;
                if (i >= _size)
                    return npos;
                int w = i / bits_per_word;
                Word masked = _words[w] & (~Word{ 0 } << (i % bits_per_word));
                if (masked)
                    return w * bits_per_word + std::countr_zero(masked);
                return find_from_word(w + 1);
            }

            auto intersects(const Bitset & other) const -> bool
            {
                for (std::size_t w = 0 ; w < _words.size() ; ++w)
                    if (_words[w] & other._words[w])
                        return true;
                return false;
            }

            auto is_subset_of(const Bitset & other) const -> bool
            {
                for (std::size_t w = 0 ; w < _words.size() ; ++w)
                    if (_words[w] & ~other._words[w])
                        return false;
                return true;
            }

            auto operator&= (const Bitset & other) -> Bitset &
            {
                for (std::size_t w = 0 ; w < _words.size() ; ++w)
                    _words[w] &= other._words[w];
                return *this;
            }

            auto operator|= (const Bitset & other) -> Bitset &
            {
                for (std::size_t w = 0 ; w < _words.size() ; ++w)
                    _words[w] |= other._words[w];
                return *this;
            }

            /// Clear every bit that is set in other.
            auto subtract(const Bitset & other) -> void
            {
                for (std::size_t w = 0 ; w < _words.size() ; ++w)
                    _words[w] &= ~other._words[w];
            }

            auto operator== (const Bitset &) const -> bool = default;

            template <typename F_>
            auto for_each(F_ && f) const -> void
            {
                for (std::size_t w = 0 ; w < _words.size() ; ++w) {
                    Word bits = _words[w];
                    while (bits) {
                        int b = std::countr_zero(bits);
                        bits &= bits - 1;
                        f(static_cast<int>(w) * bits_per_word + b);
                    }
                }
            }

        private:
            auto find_from_word(std::size_t w) const -> int
            {
                for ( ; w < _words.size() ; ++w)
                    if (_words[w])
                        return static_cast<int>(w) * bits_per_word + std::countr_zero(_words[w]);
                return npos;
            }

            auto trim() -> void
            {
                if (_size % bits_per_word != 0 && ! _words.empty())
                    _words.back() &= (Word{ 1 } << (_size % bits_per_word)) - 1;
            }
    };
}

#endif
