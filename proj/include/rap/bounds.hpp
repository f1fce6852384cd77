#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rap/numeric.hpp"

namespace rap::bounds {

/** Binomial coefficient, exact; zero outside 0 <= k <= n. */
BigInt binomial(int n, int k);

/** Ceiling of a/b on nonnegative exact integers.  Pre: a >= 0, b >= 1. */
BigInt ceil_div(const BigInt& a, const BigInt& b);

/** Strict upper bound on the average number of l-faces per k-face of a
 *  compact right-angled polytope:
 *
 *      C(n-l, n-k) * (C(floor(n/2), l) + C(ceil(n/2), l))
 *      --------------------------------------------------
 *              C(floor(n/2), k) + C(ceil(n/2), k)
 *
 *  Pre: n >= 3 and 0 <= l < k <= ceil(n/2).  The pair (1, 0) is degenerate:
 *  the bound equals 2, which every edge attains, so screens skip l = 0 by
 *  default. */
Rational nk_bound(int n, int k, int l);

enum class NuRule { max_rule, linear };

/** Knobs for the dimension cascades.  The defaults reproduce the published
 *  reference tables; v5_base = 2 switches the seed to the older 5-dimensional
 *  census value. */
struct BoundsConfig {
    /// Known floors for nu_n = a_min + v_inf in low dimensions.
    std::map<int, BigInt> nu_bases{{3, 9}, {4, 15}, {5, 26}};
    BigInt v5_base = 3;
    BigInt vfin7_base = 4;
    NuRule nu_update_rule = NuRule::max_rule;
    int max_dim = 12;

    /// Throws domain_error on nonsense: nonpositive bases, missing seeds,
    /// max_dim outside 5..12 (the cascades say nothing past 12).
    void check() const;

    bool operator==(const BoundsConfig&) const = default;
};

struct DimensionRow {
    int n = 0;
    BigInt nu;
    BigInt a_min;     // least facet count: 1 + nu_{n-1}
    BigInt v_inf_min; // least ideal vertex count
    std::optional<BigInt> v_fin_min; // least finite vertex count, n >= 7

    bool operator==(const DimensionRow&) const = default;
};

struct CascadeTable {
    BoundsConfig config;
    std::vector<DimensionRow> rows; // n = 5 .. config.max_dim

    const DimensionRow* find(int n) const;

    bool operator==(const CascadeTable&) const = default;
};

/** Ideal-vertex cascade.  Row 5 seeds nu_5 = nu_bases[5], a_min = 1 +
 *  nu_bases[4], v_inf = v5_base.  For n >= 6:
 *
 *      a_min(n) = 1 + nu_{n-1}
 *      v_inf(n) = ceil( a_min(n) * v_inf(n-1) / (2(n-1)) )
 *      nu_n     = max( 2 nu_{n-1} + 5 - 2n,  a_min(n) + v_inf(n) )
 *
 *  with NuRule::linear keeping only the first branch of the max. */
CascadeTable cascade_ideal(const BoundsConfig& config);

/** Finite-vertex cascade on top of the ideal table: v_fin(7) = vfin7_base
 *  and v_fin(n) = ceil(a_min(n) * v_fin(n-1) / n) for n >= 8.  Returns the
 *  combined table.  Pre: max_dim >= 7. */
CascadeTable cascade_finite(const BoundsConfig& config, const CascadeTable& ideal);

/** One mismatch between a computed table entry and the published reference
 *  value embedded in this library.  known_erratum marks rows where the
 *  published number contradicts its own recurrence: the printed inputs of
 *  the row, pushed through the update formula exactly, give our value, not
 *  the printed one.  Recomputed output is authoritative there. */
struct TableDiff {
    std::string table;   // "ideal" or "finite"
    int n = 0;
    std::string column;  // "a_min", "nu", "v_inf", "v_fin"
    BigInt published;
    BigInt computed;
    bool known_erratum = false;

    bool operator==(const TableDiff&) const = default;
};

/** Compare against the embedded published values (stored as decimal
 *  strings; the large rows exceed int64).  Empty result means full
 *  agreement.  Nothing is patched: a known erratum still shows up here,
 *  flagged, with both numbers. */
std::vector<TableDiff> verify_against_paper(const CascadeTable& ideal,
                                            const CascadeTable& finite);

struct MinimaRow {
    BigInt a_min;
    BigInt v_inf_min;
    std::optional<BigInt> v_fin_min;
};

/** Minimum facet and vertex counts in dimension n.  Pre: the table has a
 *  row for n. */
MinimaRow min_table_lookup(const CascadeTable& table, int n);

std::string format_markdown(const CascadeTable& table);
/// Header n,a_min,nu,v_inf,v_fin; the v_fin column is empty below 7.
std::string format_csv(const CascadeTable& table);
/// JSON with every count as a decimal string, round-trip safe at any size.
std::string format_structured(const CascadeTable& table);

} // namespace rap::bounds
