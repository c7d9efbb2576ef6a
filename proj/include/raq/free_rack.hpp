#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "raq/rack.hpp"

namespace raq::freeword {

// One letter of a free-group word: a generator id with exponent +1 or -1.
struct Letter {
    Index gen = 0;
    int exp = 1;

    bool operator==(const Letter&) const = default;
};

// Words are kept freely reduced: no letter is adjacent to its inverse.
using Word = std::vector<Letter>;

bool is_reduced(std::span<const Letter> letters);

// Free reduction. Confluent: the result does not depend on cancellation order.
Word reduce(std::span<const Letter> letters);

Word inverse(std::span<const Letter> word);

// reduce(a · b) for already-reduced inputs.
Word concat(std::span<const Letter> a, std::span<const Letter> b);

// Text form: generators are lowercase names, inverses carry a trailing
// apostrophe, letters are whitespace-separated ("a b' a"). The alphabet maps
// ids 0, 1, 2, ... to names a, b, c, ...
std::string format(std::span<const Letter> word);
std::string generator_name(Index gen);

// Parses the text form; returns the reduced word. Throws MalformedInputError
// on unknown tokens.
Word parse(const std::string& text);

}  // namespace raq::freeword

namespace raq {

// Element w ▷ generator of a free rack, stored as the formal conjugate
// w·a·w⁻¹: a reduced conjugator word plus the generator it acts on.
struct FreeRackElement {
    freeword::Word conjugator;
    Index generator = 0;

    bool operator==(const FreeRackElement&) const = default;
    std::string to_string() const;
};

// Free-quandle element: same data, with the conjugator additionally not
// ending in a power of the generator (canonical coset representative).
struct FreeQuandleElement {
    freeword::Word conjugator;
    Index generator = 0;

    bool operator==(const FreeQuandleElement&) const = default;
    std::string to_string() const;
    FreeRackElement as_rack_element() const { return {conjugator, generator}; }
};

// (w, a) ▷ (v, b) = (w a w⁻¹ v, b).
FreeRackElement fr_op(const FreeRackElement& x, const FreeRackElement& y);

// Inverse of the left translation by x: fr_op(x, fr_op_inv(x, y)) == y.
FreeRackElement fr_op_inv(const FreeRackElement& x, const FreeRackElement& y);

// Strips trailing powers of the generator from the conjugator. Idempotent.
FreeQuandleElement fq_canonicalize(FreeRackElement x);

FreeQuandleElement fq_op(const FreeQuandleElement& x, const FreeQuandleElement& y);
FreeQuandleElement fq_op_inv(const FreeQuandleElement& x, const FreeQuandleElement& y);

// Evaluates the formal conjugate in a finite rack under the generator
// assignment: starts from assignment[generator] and applies the conjugator
// letters innermost (rightmost) first; exponent -1 uses the inverse
// translation. Throws MalformedInputError if the assignment is too short or
// maps outside the target.
Index extend_map(std::span<const Index> assignment, const FiniteRack& target,
                 const FreeRackElement& x);
Index extend_map(std::span<const Index> assignment, const FiniteRack& target,
                 const FreeQuandleElement& x);

}  // namespace raq
