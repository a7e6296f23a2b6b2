#pragma once

#include <algorithm>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "sct/error.hpp"
#include "sct/finite_field.hpp"
#include "sct/group.hpp"
#include "sct/report.hpp"
#include "sct/sct.hpp"
#include "sct/sct_structure.hpp"

namespace sct {

/// A vector of field-element codes, a coordinate tuple against the algebra
/// basis (or its dual basis).
using FqVec = std::vector<long long>;

/// A finite-dimensional associative nilpotent algebra over F_q, given by
/// structure constants against a fixed basis.
struct NilpotentAlgebra {
    FiniteField field;
    int dim = 0;
    std::vector<std::vector<FqVec>> products;  // products[i][j] = b_i * b_j
    int nil_class = 0;                          // least c with J^c = 0

    FqVec zero() const { return FqVec(static_cast<size_t>(dim), 0); }

    bool is_zero(const FqVec& v) const {
        for (long long c : v)
            if (c != 0) return false;
        return true;
    }

    FqVec add(const FqVec& a, const FqVec& b) const {
        FqVec out(static_cast<size_t>(dim));
        for (int t = 0; t < dim; t++)
            out[static_cast<size_t>(t)] =
                field.add(a[static_cast<size_t>(t)], b[static_cast<size_t>(t)]);
        return out;
    }

    FqVec scale(long long c, const FqVec& v) const {
        FqVec out(static_cast<size_t>(dim));
        for (int t = 0; t < dim; t++)
            out[static_cast<size_t>(t)] = field.mul(c, v[static_cast<size_t>(t)]);
        return out;
    }

    FqVec mul(const FqVec& a, const FqVec& b) const {
        FqVec out = zero();
        for (int i = 0; i < dim; i++) {
            if (a[static_cast<size_t>(i)] == 0) continue;
            for (int j = 0; j < dim; j++) {
                if (b[static_cast<size_t>(j)] == 0) continue;
                const FqVec& prod = products[static_cast<size_t>(i)][static_cast<size_t>(j)];
                if (is_zero(prod)) continue;
                long long coeff =
                    field.mul(a[static_cast<size_t>(i)], b[static_cast<size_t>(j)]);
                for (int t = 0; t < dim; t++) {
                    if (prod[static_cast<size_t>(t)] == 0) continue;
                    out[static_cast<size_t>(t)] = field.add(
                        out[static_cast<size_t>(t)],
                        field.mul(coeff, prod[static_cast<size_t>(t)]));
                }
            }
        }
        return out;
    }

    FqVec basis_vector(int i) const {
        FqVec out = zero();
        out[static_cast<size_t>(i)] = 1;
        return out;
    }
};

namespace detail {

/// Reduced row echelon form over F: nonzero rows with strictly increasing
/// pivot columns, pivots 1, pivot columns cleared elsewhere. Canonical for
/// the row span.
inline std::vector<FqVec> rref(const FiniteField& F, std::vector<FqVec> rows) {
    size_t rank = 0;
    if (rows.empty()) return rows;
    size_t width = rows[0].size();
    for (size_t col = 0; col < width && rank < rows.size(); col++) {
        size_t pivot = rank;
        while (pivot < rows.size() && rows[pivot][col] == 0) pivot++;
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        long long scale = F.inv(rows[rank][col]);
        for (size_t t = 0; t < width; t++) rows[rank][t] = F.mul(scale, rows[rank][t]);
        for (size_t r = 0; r < rows.size(); r++) {
            if (r == rank || rows[r][col] == 0) continue;
            long long c = rows[r][col];
            for (size_t t = 0; t < width; t++)
                rows[r][t] = F.sub(rows[r][t], F.mul(c, rows[rank][t]));
        }
        rank++;
    }
    rows.resize(rank);
    return rows;
}

/// Residue of v modulo the row span of an rref basis; zero iff v lies in
/// the span.
inline FqVec reduce_against(const FiniteField& F, const std::vector<FqVec>& basis, FqVec v) {
    for (const FqVec& row : basis) {
        size_t col = 0;
        while (row[col] == 0) col++;
        if (v[col] == 0) continue;
        long long c = v[col];
        for (size_t t = 0; t < v.size(); t++) v[t] = F.sub(v[t], F.mul(c, row[t]));
    }
    return v;
}

inline bool in_span(const FiniteField& F, const std::vector<FqVec>& basis, const FqVec& v) {
    for (long long c : reduce_against(F, basis, v))
        if (c != 0) return false;
    return true;
}

/// All q^r vectors in the span of an r-row basis, in coefficient-code order.
inline std::vector<FqVec> span_elements(const FiniteField& F, const std::vector<FqVec>& basis,
                                        size_t width) {
    std::vector<FqVec> out{FqVec(width, 0)};
    for (const FqVec& row : basis) {
        std::vector<FqVec> next;
        next.reserve(out.size() * static_cast<size_t>(F.order()));
        for (long long c = 0; c < F.order(); c++)
            for (const FqVec& v : out) {
                FqVec w(width);
                for (size_t t = 0; t < width; t++) w[t] = F.add(v[t], F.mul(c, row[t]));
                next.push_back(std::move(w));
            }
        out = std::move(next);
    }
    return out;
}

/// Basis of the solution space of the homogeneous system rows * x = 0.
inline std::vector<FqVec> kernel_basis(const FiniteField& F, const std::vector<FqVec>& rows,
                                       size_t width) {
    std::vector<FqVec> R = rref(F, rows);
    std::vector<int> pivot_of_col(width, -1);
    for (size_t r = 0; r < R.size(); r++) {
        size_t col = 0;
        while (R[r][col] == 0) col++;
        pivot_of_col[col] = static_cast<int>(r);
    }
    std::vector<FqVec> out;
    for (size_t f = 0; f < width; f++) {
        if (pivot_of_col[f] >= 0) continue;
        FqVec v(width, 0);
        v[f] = 1;
        for (size_t col = 0; col < width; col++)
            if (pivot_of_col[col] >= 0)
                v[col] = F.neg(R[static_cast<size_t>(pivot_of_col[col])][f]);
        out.push_back(std::move(v));
    }
    return out;
}

}  // namespace detail

/// An F_q-subspace of the algebra closed under multiplication by the whole
/// algebra on both sides, held as a canonical row-reduced basis.
struct Ideal {
    std::vector<FqVec> basis;

    int dim() const { return static_cast<int>(basis.size()); }

    long long size(const FiniteField& F) const {
        long long out = 1;
        for (int i = 0; i < dim(); i++) out *= F.order();
        return out;
    }

    bool contains(const NilpotentAlgebra& J, const FqVec& v) const {
        return detail::in_span(J.field, basis, v);
    }
};

inline Ideal make_ideal(const NilpotentAlgebra& J, std::vector<FqVec> spanning) {
    for (const FqVec& v : spanning)
        require(v.size() == static_cast<size_t>(J.dim), "InputError",
                "spanning vector has wrong length");
    Ideal I{detail::rref(J.field, std::move(spanning))};
    for (size_t r = 0; r < I.basis.size(); r++)
        for (int j = 0; j < J.dim; j++) {
            FqVec e = J.basis_vector(j);
            if (!detail::in_span(J.field, I.basis, J.mul(I.basis[r], e)) ||
                !detail::in_span(J.field, I.basis, J.mul(e, I.basis[r])))
                fail("NotAnIdeal", "basis row " + std::to_string(r) +
                                       " leaves the span under basis vector " + std::to_string(j));
        }
    return I;
}

inline bool ideals_equal(const Ideal& a, const Ideal& b) { return a.basis == b.basis; }

/// Builds and validates an algebra from sparse structure constants: entries
/// (i, j, b_i*b_j); unlisted products are zero. Associativity is checked on
/// all basis triples, nilpotency by the chain of power subspaces.
inline NilpotentAlgebra build_algebra(FiniteField field, int dim,
                                      const std::vector<std::tuple<int, int, FqVec>>& entries) {
    require(dim >= 0, "InputError", "dimension must be nonnegative");
    NilpotentAlgebra J;
    J.field = std::move(field);
    J.dim = dim;
    J.products.assign(static_cast<size_t>(dim),
                      std::vector<FqVec>(static_cast<size_t>(dim), J.zero()));
    for (const auto& [i, j, value] : entries) {
        require(i >= 0 && i < dim && j >= 0 && j < dim, "InputError",
                "structure constant index out of range");
        require(value.size() == static_cast<size_t>(dim), "InputError",
                "structure constant vector has wrong length");
        for (long long c : value)
            require(c >= 0 && c < J.field.order(), "InputError",
                    "structure constant entry is not a field element");
        J.products[static_cast<size_t>(i)][static_cast<size_t>(j)] = value;
    }

    for (int i = 0; i < dim; i++)
        for (int j = 0; j < dim; j++)
            for (int k = 0; k < dim; k++) {
                FqVec left = J.mul(J.products[static_cast<size_t>(i)][static_cast<size_t>(j)],
                                   J.basis_vector(k));
                FqVec right = J.mul(J.basis_vector(i),
                                    J.products[static_cast<size_t>(j)][static_cast<size_t>(k)]);
                if (left != right)
                    fail("NotAssociative",
                         "basis triple (" + std::to_string(i) + ", " + std::to_string(j) + ", " +
                             std::to_string(k) + ")");
            }

    std::vector<FqVec> power;
    for (int i = 0; i < dim; i++) power.push_back(J.basis_vector(i));
    power = detail::rref(J.field, power);
    J.nil_class = 1;
    while (!power.empty()) {
        std::vector<FqVec> next;
        for (const FqVec& a : power)
            for (int j = 0; j < dim; j++) next.push_back(J.mul(a, J.basis_vector(j)));
        next = detail::rref(J.field, next);
        if (next.size() == power.size())
            fail("NotNilpotent",
                 "power subspaces stabilize at dimension " + std::to_string(power.size()));
        power = std::move(next);
        J.nil_class++;
    }
    return J;
}

/// The group G = 1 + J on the q^dim coordinate vectors, with
/// (1+x)(1+y) = 1 + (x + y + xy). Element codes are mixed-radix base q,
/// so the identity (the zero vector) is element 0.
struct AlgebraGroup {
    NilpotentAlgebra algebra;
    GroupPtr group;

    long long encode(const FqVec& v) const {
        long long out = 0;
        for (size_t i = v.size(); i-- > 0;) out = out * algebra.field.order() + v[i];
        return out;
    }

    FqVec decode(long long code) const {
        FqVec out(static_cast<size_t>(algebra.dim));
        for (int i = 0; i < algebra.dim; i++) {
            out[static_cast<size_t>(i)] = code % algebra.field.order();
            code /= algebra.field.order();
        }
        return out;
    }
};

inline constexpr long long kAlgebraGroupCap = 10000;

inline AlgebraGroup algebra_group(const NilpotentAlgebra& J) {
    long long n = 1;
    for (int i = 0; i < J.dim; i++) {
        n *= J.field.order();
        require(n <= kAlgebraGroupCap, "OrderCapExceeded",
                "group order exceeds " + std::to_string(kAlgebraGroupCap));
    }
    AlgebraGroup A;
    A.algebra = J;

    std::vector<FqVec> vec(static_cast<size_t>(n));
    std::vector<std::string> labels(static_cast<size_t>(n));
    for (long long g = 0; g < n; g++) {
        vec[static_cast<size_t>(g)] = A.decode(g);
        if (g == 0) {
            labels[0] = "1";
            continue;
        }
        std::string lab = "1+(";
        for (int i = 0; i < J.dim; i++) {
            if (i) lab += ",";
            lab += std::to_string(vec[static_cast<size_t>(g)][static_cast<size_t>(i)]);
        }
        labels[static_cast<size_t>(g)] = lab + ")";
    }

    std::vector<std::vector<int>> table(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n)));
    for (long long a = 0; a < n; a++)
        for (long long b = 0; b < n; b++) {
            const FqVec& x = vec[static_cast<size_t>(a)];
            const FqVec& y = vec[static_cast<size_t>(b)];
            table[static_cast<size_t>(a)][static_cast<size_t>(b)] =
                static_cast<int>(A.encode(J.add(J.add(x, y), J.mul(x, y))));
        }
    A.group = detail::make_group(static_cast<int>(n), table, std::move(labels));
    return A;
}

namespace detail {

/// Orbits of a two-sided action of G = 1+J on coordinate vectors, found
/// breadth-first from the least unvisited code. The group is generated by
/// the elements 1 + c b_i, so one step per basis vector and side suffices:
/// `step(which, v)` returns the increment direction for generator index
/// `which` (first all left generators, then all right ones).
template <typename StepFn>
std::vector<std::vector<long long>> two_sided_orbits(const AlgebraGroup& A, const StepFn& step) {
    const NilpotentAlgebra& J = A.algebra;
    long long n = 1;
    for (int i = 0; i < J.dim; i++) n *= J.field.order();
    std::vector<char> seen(static_cast<size_t>(n), 0);
    std::vector<std::vector<long long>> orbits;
    for (long long seed = 0; seed < n; seed++) {
        if (seen[static_cast<size_t>(seed)]) continue;
        std::vector<long long> orbit{seed};
        seen[static_cast<size_t>(seed)] = 1;
        for (size_t at = 0; at < orbit.size(); at++) {
            FqVec v = A.decode(orbit[at]);
            for (int which = 0; which < 2 * J.dim; which++) {
                FqVec direction = step(which, v);
                if (J.is_zero(direction)) continue;
                for (long long c = 1; c < J.field.order(); c++) {
                    long long code = A.encode(J.add(v, J.scale(c, direction)));
                    if (!seen[static_cast<size_t>(code)]) {
                        seen[static_cast<size_t>(code)] = 1;
                        orbit.push_back(code);
                    }
                }
            }
        }
        std::sort(orbit.begin(), orbit.end());
        orbits.push_back(std::move(orbit));
    }
    return orbits;
}

}  // namespace detail

/// The double-orbit supercharacter theory of 1+J: superclasses are the sets
/// 1 + GvG, supercharacters come from the two-sided orbits on the dual
/// space. The class partition is validated from scratch and the dual-orbit
/// character sums are matched against the resulting supercharacters, so a
/// convention error on either side cannot pass silently.
inline SupercharacterTheory double_orbit_sct(const AlgebraGroup& A) {
    const NilpotentAlgebra& J = A.algebra;
    const FiniteField& F = J.field;
    const long long n = A.group->order();
    require(n <= static_cast<long long>(kTableOrderCap), "OrderCapExceeded",
            "character table work is capped at order " + std::to_string(kTableOrderCap));

    // superclasses: orbits under v -> v + c*(b_i v) and v -> v + c*(v b_i)
    auto class_step = [&](int which, const FqVec& v) {
        int i = which % J.dim;
        return which < J.dim ? J.mul(J.basis_vector(i), v) : J.mul(v, J.basis_vector(i));
    };
    std::vector<std::vector<long long>> orbits = detail::two_sided_orbits(A, class_step);

    std::vector<std::vector<int>> blocks;
    for (const auto& orbit : orbits) blocks.emplace_back(orbit.begin(), orbit.end());
    std::sort(blocks.begin(), blocks.end(),
              [](const auto& a, const auto& b) { return a[0] < b[0]; });
    Partition classes = Partition::from_blocks(static_cast<int>(n), std::move(blocks));

    TablePtr table = character_table(A.group);
    ValidationOutcome outcome = validate_sct(table, classes);
    if (!outcome.valid)
        fail("ValidationFailure", "double orbit classes rejected: " + outcome.reason);

    // dual orbits: mu -> mu + c*(mu after right/left multiplication by b_i)
    auto dual_step = [&](int which, const FqVec& m) {
        int i = which % J.dim;
        FqVec out = J.zero();
        for (int j = 0; j < J.dim; j++) {
            const FqVec& prod = which < J.dim
                                    ? J.products[static_cast<size_t>(j)][static_cast<size_t>(i)]
                                    : J.products[static_cast<size_t>(i)][static_cast<size_t>(j)];
            long long val = 0;
            for (int t = 0; t < J.dim; t++)
                val = F.add(val, F.mul(m[static_cast<size_t>(t)], prod[static_cast<size_t>(t)]));
            out[static_cast<size_t>(j)] = val;
        }
        return out;
    };
    std::vector<std::vector<long long>> dual_orbits = detail::two_sided_orbits(A, dual_step);
    if (dual_orbits.size() != orbits.size())
        fail("ValidationFailure", "dual orbit count differs from superclass count");

    // chi(1+v) = sum over the orbit of zeta_p^{Tr(mu(v))}
    std::vector<ClassFunction> expected = outcome.theory->supercharacters;
    for (const auto& orbit : dual_orbits) {
        std::vector<Cyclotomic> per_element;
        per_element.reserve(static_cast<size_t>(n));
        for (long long g = 0; g < n; g++) {
            FqVec v = A.decode(g);
            std::vector<Rational> counts(static_cast<size_t>(F.p()), Rational(0));
            for (long long mu_code : orbit) {
                FqVec m = A.decode(mu_code);
                long long pairing = 0;
                for (int t = 0; t < J.dim; t++)
                    pairing = F.add(pairing, F.mul(m[static_cast<size_t>(t)],
                                                   v[static_cast<size_t>(t)]));
                size_t tr = static_cast<size_t>(F.trace(pairing));
                counts[tr] = counts[tr] + Rational(1);
            }
            per_element.push_back(
                Cyclotomic::from_root_combination(F.p(), std::move(counts)));
        }
        for (const auto& block : outcome.theory->classes.blocks)
            for (int g : block)
                if (!(per_element[static_cast<size_t>(g)] ==
                      per_element[static_cast<size_t>(block[0])]))
                    fail("ValidationFailure",
                         "a dual orbit character is not constant on a superclass");
        std::vector<Cyclotomic> by_class;
        for (size_t c = 0; c < static_cast<size_t>(A.group->num_classes()); c++)
            by_class.push_back(per_element[static_cast<size_t>(
                A.group->class_reps()[c])]);
        ClassFunction chi(A.group, std::move(by_class));
        auto it = std::find(expected.begin(), expected.end(), chi);
        if (it == expected.end())
            fail("ValidationFailure",
                 "a dual orbit character is not a supercharacter of the validated theory");
        expected.erase(it);
    }
    if (!expected.empty())
        fail("ValidationFailure", "some supercharacters are not dual orbit characters");
    return *std::move(outcome.theory);
}

/// J = J^1, J^2, J^3, ... down to and including the zero ideal.
inline std::vector<Ideal> power_ideals(const NilpotentAlgebra& J) {
    std::vector<Ideal> out;
    std::vector<FqVec> power;
    for (int i = 0; i < J.dim; i++) power.push_back(J.basis_vector(i));
    power = detail::rref(J.field, power);
    out.push_back(make_ideal(J, power));
    while (!out.back().basis.empty()) {
        std::vector<FqVec> next;
        for (const FqVec& a : out.back().basis)
            for (int j = 0; j < J.dim; j++) next.push_back(J.mul(a, J.basis_vector(j)));
        out.push_back(make_ideal(J, std::move(next)));
    }
    if (static_cast<int>(out.size()) != J.nil_class)
        fail_internal("power ideal chain length differs from the nilpotency class");
    return out;
}

/// Ann_0 = 0 and Ann_{i+1}/Ann_i = Ann(J/Ann_i), ascending to J. Each step
/// is the kernel of the stacked left- and right-multiplication maps into
/// the quotient by the previous term.
inline std::vector<Ideal> annihilator_series(const NilpotentAlgebra& J) {
    std::vector<Ideal> out{Ideal{}};
    while (out.back().dim() < J.dim) {
        const std::vector<FqVec>& prev = out.back().basis;
        std::vector<FqVec> constraints;
        for (int j = 0; j < J.dim; j++)
            for (int side = 0; side < 2; side++) {
                // rows of the map x -> residue of x*b_j (or b_j*x) mod prev
                std::vector<FqVec> residues;
                for (int i = 0; i < J.dim; i++) {
                    FqVec prod = side == 0
                                     ? J.products[static_cast<size_t>(i)][static_cast<size_t>(j)]
                                     : J.products[static_cast<size_t>(j)][static_cast<size_t>(i)];
                    residues.push_back(detail::reduce_against(J.field, prev, prod));
                }
                for (int t = 0; t < J.dim; t++) {
                    FqVec row(static_cast<size_t>(J.dim));
                    for (int i = 0; i < J.dim; i++)
                        row[static_cast<size_t>(i)] = residues[static_cast<size_t>(i)][static_cast<size_t>(t)];
                    constraints.push_back(std::move(row));
                }
            }
        std::vector<FqVec> next =
            detail::kernel_basis(J.field, constraints, static_cast<size_t>(J.dim));
        Ideal I = make_ideal(J, std::move(next));
        if (I.dim() <= out.back().dim())
            fail_internal("upper annihilator series stalled below the whole algebra");
        for (const FqVec& b : out.back().basis)
            if (!detail::in_span(J.field, I.basis, b))
                fail_internal("annihilator series is not ascending");
        out.push_back(std::move(I));
    }
    if (static_cast<int>(out.size()) != J.nil_class)
        fail_internal("annihilator series length differs from the nilpotency class");
    return out;
}

namespace detail {

inline Subgroup one_plus(const AlgebraGroup& A, const Ideal& I) {
    std::vector<int> members;
    for (const FqVec& v :
         span_elements(A.algebra.field, I.basis, static_cast<size_t>(A.algebra.dim)))
        members.push_back(static_cast<int>(A.encode(v)));
    return make_subgroup(A.group, std::move(members));
}

}  // namespace detail

/// Checks, term by term, that the lower central series of the double-orbit
/// theory is 1+J^i and the upper central series is 1+Ann_i(J), plus the
/// bridging containments between the two ideal chains.
inline Report compare_series(const AlgebraGroup& A, const SupercharacterTheory& S) {
    require(same_group(A.group, S.group()), "GroupMismatch",
            "theory does not live on the algebra group");
    Report rep;
    rep.title = "algebra series";
    const NilpotentAlgebra& J = A.algebra;

    CentralSeries lower = lower_central_series(S);
    CentralSeries upper = upper_central_series(S);
    std::vector<Ideal> powers = power_ideals(J);
    std::vector<Ideal> anns = annihilator_series(J);

    rep.add("nilpotent", "the double orbit theory is nilpotent",
            lower.terminates && upper.terminates);
    rep.add("length.lower", "the lower series matches the power ideal chain in length",
            lower.terms.size() == powers.size(),
            std::to_string(lower.terms.size()) + " terms vs " + std::to_string(powers.size()));
    rep.add("length.upper", "the upper series matches the annihilator chain in length",
            upper.terms.size() == anns.size(),
            std::to_string(upper.terms.size()) + " terms vs " + std::to_string(anns.size()));

    size_t steps = std::min(lower.terms.size(), powers.size());
    for (size_t i = 0; i < steps; i++) {
        Subgroup expected = detail::one_plus(A, powers[i]);
        rep.add("gamma." + std::to_string(i + 1),
                "the lower central series term equals one plus the power ideal",
                subgroup_equal(lower.terms[i], expected),
                "order " + std::to_string(lower.terms[i].order()));
    }
    steps = std::min(upper.terms.size(), anns.size());
    for (size_t i = 0; i < steps; i++) {
        Subgroup term = upper.terms[upper.terms.size() - 1 - i];
        Subgroup expected = detail::one_plus(A, anns[i]);
        rep.add("zeta." + std::to_string(i),
                "the upper central series term equals one plus the annihilator term",
                subgroup_equal(term, expected), "order " + std::to_string(term.order()));
    }

    int c = J.nil_class - 1;  // largest exponent with a nonzero power
    for (int i = 1; i <= c; i++) {
        const Ideal& high_power = powers[static_cast<size_t>(c - i)];  // J^{c+1-i}
        bool contained = true;
        for (const FqVec& b : high_power.basis)
            if (!detail::in_span(J.field, anns[static_cast<size_t>(i)].basis, b))
                contained = false;
        rep.add("containment." + std::to_string(i),
                "the complementary power ideal lies inside the annihilator term", contained);
    }
    return rep;
}

/// For every 0 <= m <= dim, an ideal subgroup 1+I of order q^m that is a
/// union of superclasses: I extends an annihilator term by part of the next
/// one's basis.
inline std::vector<std::pair<long long, Subgroup>> ideal_subgroups_by_order(
    const AlgebraGroup& A, const SupercharacterTheory& S) {
    require(same_group(A.group, S.group()), "GroupMismatch",
            "theory does not live on the algebra group");
    const NilpotentAlgebra& J = A.algebra;
    std::vector<Ideal> anns = annihilator_series(J);

    std::vector<std::pair<long long, Subgroup>> out;
    for (int m = 0; m <= J.dim; m++) {
        // pick the annihilator term below q^m and widen it within the next
        // one; any intermediate subspace is an ideal because J maps each
        // term into the previous one on both sides
        size_t i = 0;
        while (i + 1 < anns.size() && anns[i + 1].dim() <= m) i++;
        std::vector<FqVec> spanning = anns[i].basis;
        for (const FqVec& b : anns[std::min(i + 1, anns.size() - 1)].basis) {
            if (static_cast<int>(spanning.size()) == m) break;
            if (detail::in_span(J.field, spanning, b)) continue;
            spanning.push_back(b);
            spanning = detail::rref(J.field, spanning);
        }
        Ideal I = make_ideal(J, std::move(spanning));
        if (I.dim() != m) fail_internal("ideal of the requested dimension was not constructed");
        Subgroup sub = detail::one_plus(A, I);
        if (!is_s_normal(S, sub))
            fail_internal("an ideal subgroup is not a union of superclasses");
        long long order = 1;
        for (int t = 0; t < m; t++) order *= J.field.order();
        out.emplace_back(order, std::move(sub));
    }
    return out;
}

/// Strictly upper-triangular n x n matrices over F_q: basis e_{ij} for
/// i < j in lexicographic order, products e_{ij} e_{kl} = [j==k] e_{il}.
inline NilpotentAlgebra ut_algebra(int n, long long q, std::vector<int> modulus = {}) {
    require(n >= 2, "InputError", "matrix size must be at least 2");
    FiniteField F;
    try {
        F = field_from_order(q, std::move(modulus));
    } catch (const Error& e) {
        fail("UnsupportedField", e.what());
    }

    std::vector<std::pair<int, int>> pairs;
    for (int i = 1; i <= n; i++)
        for (int j = i + 1; j <= n; j++) pairs.emplace_back(i, j);
    auto index_of = [&](int i, int j) {
        for (size_t t = 0; t < pairs.size(); t++)
            if (pairs[t] == std::make_pair(i, j)) return static_cast<int>(t);
        fail_internal("missing matrix unit");
    };

    int dim = static_cast<int>(pairs.size());
    std::vector<std::tuple<int, int, FqVec>> entries;
    for (size_t a = 0; a < pairs.size(); a++)
        for (size_t b = 0; b < pairs.size(); b++) {
            if (pairs[a].second != pairs[b].first) continue;
            FqVec value(static_cast<size_t>(dim), 0);
            value[static_cast<size_t>(index_of(pairs[a].first, pairs[b].second))] = 1;
            entries.emplace_back(static_cast<int>(a), static_cast<int>(b), std::move(value));
        }
    return build_algebra(std::move(F), dim, entries);
}

}  // namespace sct
