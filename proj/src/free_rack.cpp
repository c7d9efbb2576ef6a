#include "raq/free_rack.hpp"

#include <cctype>
#include <sstream>

namespace raq::freeword {

bool is_reduced(std::span<const Letter> letters) {
    for (std::size_t i = 0; i + 1 < letters.size(); ++i)
        if (letters[i].gen == letters[i + 1].gen && letters[i].exp == -letters[i + 1].exp)
            return false;
    return true;
}

Word reduce(std::span<const Letter> letters) {
    Word out;
    out.reserve(letters.size());
    for (const Letter& l : letters) {
        if (!out.empty() && out.back().gen == l.gen && out.back().exp == -l.exp)
            out.pop_back();
        else
            out.push_back(l);
    }
    return out;
}

Word inverse(std::span<const Letter> word) {
    Word out;
    out.reserve(word.size());
    for (auto it = word.rbegin(); it != word.rend(); ++it) out.push_back({it->gen, -it->exp});
    return out;
}

Word concat(std::span<const Letter> a, std::span<const Letter> b) {
    Word out(a.begin(), a.end());
    for (const Letter& l : b) {
        if (!out.empty() && out.back().gen == l.gen && out.back().exp == -l.exp)
            out.pop_back();
        else
            out.push_back(l);
    }
    return out;
}

std::string generator_name(Index gen) {
    if (gen < 26) return std::string(1, static_cast<char>('a' + gen));
    return "g" + std::to_string(gen);
}

std::string format(std::span<const Letter> word) {
    if (word.empty()) return "1";
    std::ostringstream out;
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (i) out << ' ';
        out << generator_name(word[i].gen);
        if (word[i].exp < 0) out << '\'';
    }
    return out.str();
}

Word parse(const std::string& text) {
    Word raw;
    std::istringstream in(text);
    std::string token;
    while (in >> token) {
        int exp = 1;
        if (token.ends_with('\'')) {
            exp = -1;
            token.pop_back();
        }
        Index gen;
        if (token.size() == 1 && token[0] >= 'a' && token[0] <= 'z') {
            gen = static_cast<Index>(token[0] - 'a');
        } else if (token.size() > 1 && token[0] == 'g') {
            try {
                gen = static_cast<Index>(std::stoul(token.substr(1)));
            } catch (const std::exception&) {
                throw MalformedInputError("bad generator token '" + token + "'");
            }
        } else {
            throw MalformedInputError("bad generator token '" + token + "'");
        }
        raw.push_back({gen, exp});
    }
    return reduce(raw);
}

}  // namespace raq::freeword

namespace raq {

using freeword::Letter;
using freeword::Word;

std::string FreeRackElement::to_string() const {
    return "(" + freeword::format(conjugator) + ", " + freeword::generator_name(generator) + ")";
}

std::string FreeQuandleElement::to_string() const {
    return as_rack_element().to_string();
}

namespace {

// The group element w a w⁻¹ represented by x, as a reduced word.
Word acting_word(const FreeRackElement& x) {
    Word g = x.conjugator;
    g = freeword::concat(g, Word{Letter{x.generator, 1}});
    return freeword::concat(g, freeword::inverse(x.conjugator));
}

}  // namespace

FreeRackElement fr_op(const FreeRackElement& x, const FreeRackElement& y) {
    return {freeword::concat(acting_word(x), y.conjugator), y.generator};
}

FreeRackElement fr_op_inv(const FreeRackElement& x, const FreeRackElement& y) {
    return {freeword::concat(freeword::inverse(acting_word(x)), y.conjugator), y.generator};
}

FreeQuandleElement fq_canonicalize(FreeRackElement x) {
    while (!x.conjugator.empty() && x.conjugator.back().gen == x.generator)
        x.conjugator.pop_back();
    return {std::move(x.conjugator), x.generator};
}

FreeQuandleElement fq_op(const FreeQuandleElement& x, const FreeQuandleElement& y) {
    return fq_canonicalize(fr_op(x.as_rack_element(), y.as_rack_element()));
}

FreeQuandleElement fq_op_inv(const FreeQuandleElement& x, const FreeQuandleElement& y) {
    return fq_canonicalize(fr_op_inv(x.as_rack_element(), y.as_rack_element()));
}

Index extend_map(std::span<const Index> assignment, const FiniteRack& target,
                 const FreeRackElement& x) {
    auto image = [&](Index gen) {
        if (gen >= assignment.size())
            throw MalformedInputError("assignment does not cover generator " +
                                      freeword::generator_name(gen));
        Index v = assignment[gen];
        if (v >= target.size()) throw MalformedInputError("assignment maps outside the target");
        return v;
    };
    Index e = image(x.generator);
    for (auto it = x.conjugator.rbegin(); it != x.conjugator.rend(); ++it) {
        Index actor = image(it->gen);
        e = it->exp > 0 ? target.op(actor, e) : target.op_inv(actor, e);
    }
    return e;
}

Index extend_map(std::span<const Index> assignment, const FiniteRack& target,
                 const FreeQuandleElement& x) {
    return extend_map(assignment, target, x.as_rack_element());
}

}  // namespace raq
