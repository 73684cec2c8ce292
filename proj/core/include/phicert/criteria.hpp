#pragma once

#include "phicert/intpoly.hpp"
#include "phicert/polygon.hpp"
#include "phicert/prime.hpp"
#include "phicert/rat.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace phicert {

enum class Criterion { Schur, Coleman, FilasetaWindow, Schonemann, GenSchonemann };
enum class Verdict { Irreducible, ExclusionWindow, HypothesisFailed, Inconclusive };

std::string_view to_string(Criterion c);
std::string_view to_string(Verdict v);

/// Half-open degree interval [lo, hi) excluded for factors in Z[x].
struct Window {
    std::int64_t lo = 0;
    std::int64_t hi = 0;

    bool contains(std::int64_t d) const noexcept { return lo <= d && d < hi; }
    friend bool operator==(const Window&, const Window&) = default;
};

struct HypothesisRecord {
    std::string name;
    bool holds = false;
    std::string detail;
};

/// One replayable step. Fields that do not apply to a criterion stay empty.
struct TraceStep {
    std::string step;
    std::optional<std::int64_t> k;
    std::optional<Prime> prime;
    std::optional<std::int64_t> witness;
    std::optional<std::int64_t> ell;
    std::optional<IntPoly> subject;  // polynomial whose polygon is recorded
    std::optional<NewtonPolygon> polygon;
    std::optional<Rat> rightmost_slope;
    std::optional<Rat> slope_bound;
    std::optional<Window> window;
    std::optional<std::int64_t> ore_divisor;
    std::string note;
};

struct Certificate {
    Criterion criterion = Criterion::Schur;
    Verdict verdict = Verdict::Inconclusive;
    std::optional<Window> window;
    IntPoly polynomial;  // the polynomial the verdict is about
    IntPoly phi;
    std::vector<HypothesisRecord> hypotheses;
    std::vector<TraceStep> trace;

    bool all_hold() const;
    std::vector<std::string> failed() const;
};

struct SchurInput {
    IntPoly phi;
    std::int64_t n = 0;
    std::vector<IntPoly> a_parts;  // a_0 .. a_{n-1}
    Integer a_n;
};

struct SylvesterPrime {
    Prime p;
    std::int64_t witness;
    std::int64_t ell;
};

/// Prime p >= k + 1 dividing some n - k + 1 .. n. The witness is scanned
/// from n downward taking its largest prime factor; ell = n - witness.
/// Requires 1 <= k <= n / 2.
SylvesterPrime sylvester_prime(std::int64_t n, std::int64_t k);

/// sum_{i=0}^{n} (n!/i!) phi^i.
IntPoly factorial_polynomial(const IntPoly& phi, std::int64_t n);

/// sum_{i<n} (n!/i!) a_i phi^i + a_n phi^n.
IntPoly schur_polynomial(const SchurInput& in);

/// sum_{i<n} (n!/i!) a_i phi^i + phi^n.
IntPoly coleman_polynomial(const IntPoly& phi, std::int64_t n, const std::vector<IntPoly>& a_parts);

/// Closed-form edges of the polygon of sum (n!/i!) phi^i at a prime p | n:
/// one edge per nonzero base-p digit c_j p^{m_j} of n, of length c_j p^{m_j}
/// and slope (p^{m_j} - 1) / (p^{m_j} (p - 1)).
std::vector<Edge> factorial_polygon_closed_form(std::int64_t n, Prime p);

/// Degree-window exclusion for F = sum a_i f_i phi^i. An empty `a_parts`
/// means every a_i = 1; otherwise it must hold n + 1 entries.
Certificate check_filaseta_window(const IntPoly& f, const IntPoly& phi, Prime p, std::int64_t k, std::int64_t ell,
                                  const std::vector<IntPoly>& a_parts = {});

Certificate check_schur(const SchurInput& in);
Certificate check_coleman(const IntPoly& phi, std::int64_t n, const std::vector<IntPoly>& a_parts);
Certificate check_schonemann(const IntPoly& f, const IntPoly& phi, Prime p);
Certificate check_gen_schonemann(const IntPoly& f, const IntPoly& phi, Prime p);

/// Recomputes every recorded polygon, slope, bound and prime choice of a
/// certificate. Returns a description of each mismatch; empty means the
/// trace replays exactly.
std::vector<std::string> replay(const Certificate& cert);

}  // namespace phicert
