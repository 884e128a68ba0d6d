#pragma once

#include <rainbow/colouring.hpp>
#include <rainbow/dominating.hpp>
#include <rainbow/ears.hpp>
#include <rainbow/graph.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace rainbow {

/// Exact non-negative rational, kept in lowest terms.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rational() = default;
    Rational(std::int64_t n, std::int64_t d = 1);

    std::int64_t floor() const { return num / den; }
    std::int64_t ceil() const { return (num + den - 1) / den; }
    /// value >= k, compared by cross-multiplication.
    bool admits(std::int64_t k) const { return k * den <= num; }
    std::string str() const;
    bool operator==(const Rational &) const = default;
};

Rational operator+(const Rational &a, const Rational &b);

/// ceil(n/2) + 1
Rational two_connected_bound(int n);
/// n/kappa + 3
Rational chordal_bound(int n, int kappa);
/// (2l+1) n / (kappa l + 1) + 2l(2l+2) - 1
Rational kappa_bound(int n, int kappa, int l);
/// l = ceil(1/epsilon), for epsilon in (0, 1].
int l_for_epsilon(double epsilon);

struct TwoConnectedOptions {
    EarSearchOptions ears;
    /// States expanded by the ear-growth search before giving up.
    std::int64_t max_states = 50'000;
    /// Candidates tried per transition kind at every state.
    int branching = 4;
};

/// Rainbow colouring of a 2-connected graph with at most ceil(n/2) + 1
/// colours.
///
/// Removable odd ears (chords included) are stripped recursively and put back
/// with balanced colourings. What remains grows from a shortest cycle coloured
/// with ceil(m/2) colours by attaching ears: odd ears cost nothing beyond the
/// balanced colours, even ears take either one fresh and one old tip colour,
/// two old tip colours (accepted only after checking the tip), or share two
/// fresh tip colours across a group of ears. The search keeps the number of
/// colours within one of ceil(|H|/2) and backtracks when no ear fits.
///
/// Throws precondition_error unless g is 2-connected, and internal_error when
/// the search exhausts its budget.
EdgeColouring colour_two_connected(const Graph &g, const TwoConnectedOptions &options = {});

struct ChordalStep {
    VertexSet separator;
    int set_size = 0;     // |D| after absorbing the separator
    int colours_used = 0; // colours on G[D] after the step
};

struct ChordalResult {
    EdgeColouring colouring;
    std::vector<ChordalStep> steps;
};

/// Separator growth for chordal graphs: absorb a minimal separator inside
/// N(D) with one fresh colour until D dominates in one step, then extend with
/// at most three more colours. At most floor(n/kappa) + 3 colours.
ChordalResult colour_chordal(const Graph &g, int kappa);

/// Grow a connected 2l-step dominating set, colour a spanning tree of it and
/// extend down to the whole graph.
EdgeColouring colour_kappa_pipeline(const Graph &g, int kappa, int l);

enum class GirthRegime { degree3_girth7, degree5_girth5 };

struct GirthResult {
    EdgeColouring colouring;
    GirthRegime regime;
    Rational bound; // n/delta + 41 or n/delta + 19
};

/// Girth pipeline: girth >= 7 with min degree >= 3 (g = 3), or girth >= 5
/// with min degree >= 5 (g = 2); the second is preferred when both hold.
GirthResult colour_girth_pipeline(const Graph &g);

} // namespace rainbow
