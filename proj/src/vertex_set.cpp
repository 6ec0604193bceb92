#include "sepcodes/vertex_set.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

#include "sepcodes/errors.hpp"

namespace sepcodes {

namespace {

std::size_t word_count(std::size_t universe) { return (universe + 63) / 64; }

// True when some member of `words` lies strictly above bit `pos`.
bool has_member_above(std::span<const std::uint64_t> words, std::size_t pos) {
    const std::size_t w = pos / 64;
    const std::size_t b = pos % 64;
    if (w < words.size() && b < 63 && (words[w] >> (b + 1)) != 0) {
        return true;
    }
    return std::any_of(words.begin() + static_cast<std::ptrdiff_t>(std::min(w + 1, words.size())), words.end(),
                       [](std::uint64_t x) { return x != 0; });
}

}  // namespace

VertexSet::VertexSet(std::size_t universe) : universe_(universe), words_(word_count(universe), 0) {}

VertexSet::VertexSet(std::size_t universe, std::initializer_list<Vertex> members) : VertexSet(universe) {
    for (Vertex v : members) {
        insert(v);
    }
}

VertexSet VertexSet::from_members(std::size_t universe, std::span<const Vertex> members) {
    VertexSet s(universe);
    for (Vertex v : members) {
        s.insert(v);
    }
    return s;
}

VertexSet VertexSet::full(std::size_t universe) {
    VertexSet s(universe);
    for (std::size_t w = 0; w < s.words_.size(); ++w) {
        s.words_[w] = ~std::uint64_t{0};
    }
    if (universe % 64 != 0) {
        s.words_.back() = (std::uint64_t{1} << (universe % 64)) - 1;
    }
    return s;
}

std::size_t VertexSet::size() const noexcept {
    std::size_t total = 0;
    for (std::uint64_t w : words_) {
        total += static_cast<std::size_t>(std::popcount(w));
    }
    return total;
}

bool VertexSet::empty() const noexcept {
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

void VertexSet::insert(Vertex v) {
    if (v >= universe_) {
        throw InputError("vertex " + std::to_string(v) + " outside universe of size " + std::to_string(universe_));
    }
    words_[v >> 6] |= std::uint64_t{1} << (v & 63);
}

void VertexSet::erase(Vertex v) {
    if (v < universe_) {
        words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
    }
}

bool VertexSet::intersects(const VertexSet& other) const noexcept {
    assert(universe_ == other.universe_);
    for (std::size_t w = 0; w < words_.size(); ++w) {
        if ((words_[w] & other.words_[w]) != 0) {
            return true;
        }
    }
    return false;
}

bool VertexSet::is_subset_of(const VertexSet& other) const noexcept {
    assert(universe_ == other.universe_);
    for (std::size_t w = 0; w < words_.size(); ++w) {
        if ((words_[w] & ~other.words_[w]) != 0) {
            return false;
        }
    }
    return true;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
    assert(universe_ == other.universe_);
    for (std::size_t w = 0; w < words_.size(); ++w) {
        words_[w] |= other.words_[w];
    }
    return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
    assert(universe_ == other.universe_);
    for (std::size_t w = 0; w < words_.size(); ++w) {
        words_[w] &= other.words_[w];
    }
    return *this;
}

VertexSet& VertexSet::operator^=(const VertexSet& other) {
    assert(universe_ == other.universe_);
    for (std::size_t w = 0; w < words_.size(); ++w) {
        words_[w] ^= other.words_[w];
    }
    return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) {
    assert(universe_ == other.universe_);
    for (std::size_t w = 0; w < words_.size(); ++w) {
        words_[w] &= ~other.words_[w];
    }
    return *this;
}

std::vector<Vertex> VertexSet::members() const {
    std::vector<Vertex> out;
    out.reserve(size());
    for_each([&](Vertex v) { out.push_back(v); });
    return out;
}

std::optional<Vertex> VertexSet::first() const noexcept {
    for (std::size_t w = 0; w < words_.size(); ++w) {
        if (words_[w] != 0) {
            return static_cast<Vertex>(w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w])));
        }
    }
    return std::nullopt;
}

std::string VertexSet::to_string() const {
    std::ostringstream os;
    os << '{';
    bool first_member = true;
    for_each([&](Vertex v) {
        os << (first_member ? "" : ",") << v;
        first_member = false;
    });
    os << '}';
    return os.str();
}

std::strong_ordering operator<=>(const VertexSet& a, const VertexSet& b) noexcept {
    const std::size_t n = std::max(a.words_.size(), b.words_.size());
    for (std::size_t w = 0; w < n; ++w) {
        const std::uint64_t x = w < a.words_.size() ? a.words_[w] : 0;
        const std::uint64_t y = w < b.words_.size() ? b.words_[w] : 0;
        if (x == y) {
            continue;
        }
        // Lowest differing member decides, unless the side lacking it has
        // nothing left, i.e. it is a proper prefix of the other list.
        const std::size_t pos = w * 64 + static_cast<std::size_t>(std::countr_zero(x ^ y));
        const bool in_a = ((x >> (pos % 64)) & 1U) != 0;
        if (in_a) {
            return has_member_above(b.words_, pos) ? std::strong_ordering::less : std::strong_ordering::greater;
        }
        return has_member_above(a.words_, pos) ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    return a.universe_ <=> b.universe_;
}

}  // namespace sepcodes
