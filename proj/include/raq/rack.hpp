#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "raq/errors.hpp"

namespace raq {

using Index = std::uint32_t;

// Square operation table. Entry at(x, y) is x ▷ y: the element x acting on y
// from the left. All indices are 0-based.
struct BinaryTable {
    std::size_t size = 0;
    std::vector<Index> op;  // row-major, size*size entries

    Index at(Index x, Index y) const { return op[std::size_t{x} * size + y]; }

    // Throws MalformedInputError on ragged rows or out-of-range entries.
    static BinaryTable from_rows(const std::vector<std::vector<Index>>& rows);

    // Checks size/op consistency and entry range without touching axioms.
    bool well_formed() const;

    // Swaps the roles of actor and acted-on element (right-action tables).
    BinaryTable transposed() const;

    bool operator==(const BinaryTable&) const = default;
};

enum class ViolationKind {
    row_not_bijective,      // the left translation by x is not a permutation
    not_self_distributive,  // x▷(y▷z) != (x▷y)▷(x▷z)
    not_idempotent,         // x▷x != x
};

struct Violation {
    ViolationKind kind = ViolationKind::row_not_bijective;
    Index x = 0, y = 0, z = 0;

    std::string describe() const;
    bool operator==(const Violation&) const = default;
};

std::string describe_violations(const std::vector<Violation>& violations,
                                std::size_t max_listed = 8);

// A validated rack: every left translation is a bijection and acts as a
// homomorphism (left self-distributivity). Immutable after construction.
class FiniteRack {
  public:
    // Returns the rack iff both axioms hold; otherwise fills `violations`.
    // Throws MalformedInputError if the table itself is broken.
    static std::optional<FiniteRack> validate(BinaryTable table,
                                              std::vector<Violation>& violations);

    // Same, but throws Error with the diagnostic text on axiom failure.
    static FiniteRack validated(BinaryTable table);

    std::size_t size() const { return table_.size; }
    Index op(Index x, Index y) const { return table_.at(x, y); }
    // Inverse of the left translation by x: op(x, op_inv(x, y)) == y.
    Index op_inv(Index x, Index y) const { return inv_[std::size_t{x} * table_.size + y]; }
    bool is_quandle() const { return quandle_; }
    const BinaryTable& table() const { return table_; }

  private:
    explicit FiniteRack(BinaryTable table);

    BinaryTable table_;
    std::vector<Index> inv_;  // row-major inverse translations
    bool quandle_ = false;
};

// A rack with x ▷ x = x for every element.
class FiniteQuandle {
  public:
    static std::optional<FiniteQuandle> validate(FiniteRack rack,
                                                 std::vector<Violation>& violations);
    static FiniteQuandle validated(FiniteRack rack);

    const FiniteRack& rack() const { return rack_; }
    std::size_t size() const { return rack_.size(); }
    Index op(Index x, Index y) const { return rack_.op(x, y); }

  private:
    explicit FiniteQuandle(FiniteRack rack) : rack_(std::move(rack)) {}
    FiniteRack rack_;
};

// Standard families. All of them validate on construction.
FiniteQuandle make_trivial(std::size_t h);                       // x ▷ y = y
FiniteQuandle make_dihedral(std::size_t n);                      // x ▷ y = 2x - y mod n, n >= 1
FiniteQuandle make_alexander(std::size_t n, std::uint64_t t);    // x ▷ y = t·y + (1-t)·x mod n, gcd(t, n) = 1

// Conjugation quandle x ▷ y = x·y·x⁻¹ of a finite group given by its
// multiplication table and inverse map. Throws MalformedInputError when the
// table is not a group or the inverse map is wrong.
FiniteQuandle make_conjugation(const BinaryTable& group_table,
                               std::span<const Index> inverse);

FiniteQuandle conjugation_s3();  // symmetric group on 3 letters, 3 orbits
FiniteQuandle conjugation_q8();  // quaternion group, 5 orbits

// Partition of the elements under the equivalence generated by y ~ x▷y.
// Orbit ids are contiguous and ordered by the least element of each orbit.
struct OrbitPartition {
    std::vector<Index> orbit_of;
    Index orbit_count = 0;
};

OrbitPartition orbits(const FiniteRack& rack);

// True iff f(x ▷ y) = f(x) ▷ f(y) for all pairs. Throws MalformedInputError
// when f has the wrong length or maps outside the target.
bool is_homomorphism(std::span<const Index> f, const FiniteRack& src,
                     const FiniteRack& dst);

}  // namespace raq
