#include "raq/rack.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <sstream>

namespace raq {

BinaryTable BinaryTable::from_rows(const std::vector<std::vector<Index>>& rows) {
    BinaryTable t;
    t.size = rows.size();
    t.op.reserve(t.size * t.size);
    for (std::size_t x = 0; x < rows.size(); ++x) {
        if (rows[x].size() != t.size) {
            std::ostringstream msg;
            msg << "row " << x << " has " << rows[x].size() << " entries, expected " << t.size;
            throw MalformedInputError(msg.str());
        }
        for (std::size_t y = 0; y < rows[x].size(); ++y) {
            if (rows[x][y] >= t.size) {
                std::ostringstream msg;
                msg << "entry (" << x << ", " << y << ") = " << rows[x][y]
                    << " is out of range [0, " << t.size << ")";
                throw MalformedInputError(msg.str());
            }
            t.op.push_back(rows[x][y]);
        }
    }
    return t;
}

bool BinaryTable::well_formed() const {
    if (op.size() != size * size) return false;
    return std::all_of(op.begin(), op.end(), [this](Index v) { return v < size; });
}

BinaryTable BinaryTable::transposed() const {
    BinaryTable t;
    t.size = size;
    t.op.assign(op.size(), 0);
    for (Index x = 0; x < size; ++x)
        for (Index y = 0; y < size; ++y) t.op[std::size_t{y} * size + x] = at(x, y);
    return t;
}

std::string Violation::describe() const {
    std::ostringstream msg;
    switch (kind) {
        case ViolationKind::row_not_bijective:
            msg << "left translation by " << x << " is not a permutation";
            break;
        case ViolationKind::not_self_distributive:
            msg << "self-distributivity fails at (" << x << ", " << y << ", " << z << ")";
            break;
        case ViolationKind::not_idempotent:
            msg << "idempotence fails at " << x;
            break;
    }
    return msg.str();
}

std::string describe_violations(const std::vector<Violation>& violations,
                                std::size_t max_listed) {
    std::ostringstream msg;
    for (std::size_t i = 0; i < violations.size() && i < max_listed; ++i) {
        if (i) msg << "; ";
        msg << violations[i].describe();
    }
    if (violations.size() > max_listed)
        msg << "; and " << (violations.size() - max_listed) << " more";
    return msg.str();
}

FiniteRack::FiniteRack(BinaryTable table) : table_(std::move(table)) {
    const std::size_t n = table_.size;
    inv_.assign(n * n, 0);
    for (Index x = 0; x < n; ++x)
        for (Index y = 0; y < n; ++y) inv_[std::size_t{x} * n + table_.at(x, y)] = y;
    quandle_ = true;
    for (Index x = 0; x < n; ++x)
        if (table_.at(x, x) != x) {
            quandle_ = false;
            break;
        }
}

std::optional<FiniteRack> FiniteRack::validate(BinaryTable table,
                                               std::vector<Violation>& violations) {
    if (!table.well_formed())
        throw MalformedInputError("operation table is not a well-formed square table");
    const std::size_t n = table.size;

    std::vector<bool> seen(n);
    for (Index x = 0; x < n; ++x) {
        std::fill(seen.begin(), seen.end(), false);
        bool bijective = true;
        for (Index y = 0; y < n; ++y) {
            Index v = table.at(x, y);
            if (seen[v]) bijective = false;
            seen[v] = true;
        }
        if (!bijective)
            violations.push_back({ViolationKind::row_not_bijective, x, 0, 0});
    }
    for (Index x = 0; x < n; ++x)
        for (Index y = 0; y < n; ++y)
            for (Index z = 0; z < n; ++z)
                if (table.at(x, table.at(y, z)) != table.at(table.at(x, y), table.at(x, z)))
                    violations.push_back({ViolationKind::not_self_distributive, x, y, z});

    if (!violations.empty()) return std::nullopt;
    return FiniteRack(std::move(table));
}

FiniteRack FiniteRack::validated(BinaryTable table) {
    std::vector<Violation> violations;
    auto rack = validate(std::move(table), violations);
    if (!rack) throw Error("rack axioms violated: " + describe_violations(violations));
    return *std::move(rack);
}

std::optional<FiniteQuandle> FiniteQuandle::validate(FiniteRack rack,
                                                     std::vector<Violation>& violations) {
    for (Index x = 0; x < rack.size(); ++x)
        if (rack.op(x, x) != x) violations.push_back({ViolationKind::not_idempotent, x, 0, 0});
    if (!violations.empty()) return std::nullopt;
    return FiniteQuandle(std::move(rack));
}

FiniteQuandle FiniteQuandle::validated(FiniteRack rack) {
    std::vector<Violation> violations;
    auto q = validate(std::move(rack), violations);
    if (!q) throw Error("quandle axiom violated: " + describe_violations(violations));
    return *std::move(q);
}

FiniteQuandle make_trivial(std::size_t h) {
    BinaryTable t;
    t.size = h;
    t.op.reserve(h * h);
    for (std::size_t x = 0; x < h; ++x)
        for (std::size_t y = 0; y < h; ++y) t.op.push_back(static_cast<Index>(y));
    return FiniteQuandle::validated(FiniteRack::validated(std::move(t)));
}

FiniteQuandle make_dihedral(std::size_t n) {
    if (n < 1) throw PreconditionError("dihedral family needs n >= 1");
    BinaryTable t;
    t.size = n;
    t.op.reserve(n * n);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            t.op.push_back(static_cast<Index>((2 * x + (n - y % n)) % n));
    return FiniteQuandle::validated(FiniteRack::validated(std::move(t)));
}

FiniteQuandle make_alexander(std::size_t n, std::uint64_t t_param) {
    if (n < 1) throw PreconditionError("alexander family needs n >= 1");
    const std::uint64_t t = t_param % n;
    if (std::gcd(t, static_cast<std::uint64_t>(n)) != 1)
        throw PreconditionError("alexander parameter t must be a unit mod n");
    BinaryTable tab;
    tab.size = n;
    tab.op.reserve(n * n);
    // t·y + (1-t)·x, computed as t·y + x - t·x with everything kept positive
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            tab.op.push_back(static_cast<Index>((t * y + x + (n - t % n) * x) % n));
    return FiniteQuandle::validated(FiniteRack::validated(std::move(tab)));
}

namespace {

void check_group(const BinaryTable& g, std::span<const Index> inverse, Index& identity) {
    if (!g.well_formed()) throw MalformedInputError("group table is not well-formed");
    if (inverse.size() != g.size) throw MalformedInputError("inverse map has the wrong length");
    const std::size_t n = g.size;
    if (n == 0) throw MalformedInputError("a group needs at least the identity element");

    bool found = false;
    for (Index e = 0; e < n && !found; ++e) {
        bool ok = true;
        for (Index x = 0; x < n && ok; ++x) ok = g.at(e, x) == x && g.at(x, e) == x;
        if (ok) {
            identity = e;
            found = true;
        }
    }
    if (!found) throw MalformedInputError("group table has no identity element");

    for (Index x = 0; x < n; ++x) {
        if (inverse[x] >= n) throw MalformedInputError("inverse map entry out of range");
        if (g.at(x, inverse[x]) != identity || g.at(inverse[x], x) != identity)
            throw MalformedInputError("inverse map does not invert element " + std::to_string(x));
    }
    for (Index x = 0; x < n; ++x)
        for (Index y = 0; y < n; ++y)
            for (Index z = 0; z < n; ++z)
                if (g.at(g.at(x, y), z) != g.at(x, g.at(y, z)))
                    throw MalformedInputError("group table is not associative");
}

}  // namespace

FiniteQuandle make_conjugation(const BinaryTable& group_table, std::span<const Index> inverse) {
    Index identity = 0;
    check_group(group_table, inverse, identity);
    const std::size_t n = group_table.size;
    BinaryTable t;
    t.size = n;
    t.op.reserve(n * n);
    for (Index x = 0; x < n; ++x)
        for (Index y = 0; y < n; ++y)
            t.op.push_back(group_table.at(group_table.at(x, y), inverse[x]));
    return FiniteQuandle::validated(FiniteRack::validated(std::move(t)));
}

FiniteQuandle conjugation_s3() {
    // Permutations of {0,1,2} in lexicographic one-line order; composition
    // (σ·τ)(i) = σ(τ(i)).
    std::vector<std::array<Index, 3>> perms;
    std::array<Index, 3> p{0, 1, 2};
    do {
        perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));

    auto index_of = [&perms](const std::array<Index, 3>& q) {
        return static_cast<Index>(std::find(perms.begin(), perms.end(), q) - perms.begin());
    };

    BinaryTable g;
    g.size = perms.size();
    g.op.reserve(g.size * g.size);
    std::vector<Index> inverse(g.size);
    for (const auto& a : perms)
        for (const auto& b : perms) {
            std::array<Index, 3> c{a[b[0]], a[b[1]], a[b[2]]};
            g.op.push_back(index_of(c));
        }
    for (std::size_t i = 0; i < perms.size(); ++i) {
        std::array<Index, 3> inv{};
        for (Index j = 0; j < 3; ++j) inv[perms[i][j]] = j;
        inverse[i] = index_of(inv);
    }
    return make_conjugation(g, inverse);
}

FiniteQuandle conjugation_q8() {
    // Elements 2u+s with unit u in {1, i, j, k} and sign s (0 = +, 1 = -).
    // base[a][b] = product of units a·b as (unit, sign).
    struct US {
        Index u;
        Index s;
    };
    constexpr US base[4][4] = {
        {{0, 0}, {1, 0}, {2, 0}, {3, 0}},
        {{1, 0}, {0, 1}, {3, 0}, {2, 1}},
        {{2, 0}, {3, 1}, {0, 1}, {1, 0}},
        {{3, 0}, {2, 0}, {1, 1}, {0, 1}},
    };
    BinaryTable g;
    g.size = 8;
    g.op.reserve(64);
    std::vector<Index> inverse(8);
    for (Index a = 0; a < 8; ++a)
        for (Index b = 0; b < 8; ++b) {
            US p = base[a / 2][b / 2];
            Index sign = (a % 2) ^ (b % 2) ^ p.s;
            g.op.push_back(2 * p.u + sign);
        }
    for (Index a = 0; a < 8; ++a) inverse[a] = (a / 2 == 0) ? a : a ^ 1u;
    return make_conjugation(g, inverse);
}

OrbitPartition orbits(const FiniteRack& rack) {
    const std::size_t n = rack.size();
    std::vector<Index> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&parent](Index a) {
        while (parent[a] != a) {
            parent[a] = parent[parent[a]];
            a = parent[a];
        }
        return a;
    };
    for (Index x = 0; x < n; ++x)
        for (Index y = 0; y < n; ++y) {
            Index a = find(y), b = find(rack.op(x, y));
            if (a != b) parent[std::max(a, b)] = std::min(a, b);
        }

    OrbitPartition part;
    part.orbit_of.assign(n, 0);
    std::vector<Index> id_of_root(n, static_cast<Index>(n));
    for (Index x = 0; x < n; ++x) {
        Index root = find(x);
        if (id_of_root[root] == n) id_of_root[root] = part.orbit_count++;
        part.orbit_of[x] = id_of_root[root];
    }
    return part;
}

bool is_homomorphism(std::span<const Index> f, const FiniteRack& src, const FiniteRack& dst) {
    if (f.size() != src.size()) throw MalformedInputError("map has the wrong length");
    for (Index v : f)
        if (v >= dst.size()) throw MalformedInputError("map image out of range");
    for (Index x = 0; x < src.size(); ++x)
        for (Index y = 0; y < src.size(); ++y)
            if (f[src.op(x, y)] != dst.op(f[x], f[y])) return false;
    return true;
}

}  // namespace raq
