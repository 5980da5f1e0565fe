#ifndef ADVGAP_DATASET_HPP
#define ADVGAP_DATASET_HPP

/// Finite labeled discrete distributions with exact rational weights, plus
/// the JSON dataset wire format.
///
/// Dataset file schema (bit-exact contract):
///   { "epsilon": "<rational>",
///     "norm": "2" | "inf" | "<rational p>",
///     "points": [[<rational>, ...], ...],
///     "labels": [<int>, ...],                  // 1-based classes
///     "weights": ["<rational>", ...],          // optional, default 1/n each
///     "num_classes": <int> }                   // optional, default max label
/// Rational entries may be "a/b", integers, or decimal literals; decimals are
/// converted exactly (0.9 -> 9/10).

#include <string>
#include <vector>

#include "advgap/rational.hpp"

namespace advgap {

/// Which ℓp norm perturbations are measured in. p = 1 is rejected: every
/// result downstream requires p in (1, inf].
class NormSpec {
public:
    enum class Kind { P, Infinity };

    static NormSpec p_norm(const Rational& p);
    static NormSpec infinity() { return NormSpec(Kind::Infinity, Rational(0)); }

    Kind kind() const { return kind_; }
    bool is_infinity() const { return kind_ == Kind::Infinity; }

    /// True when p is a (finite) integer >= 2, enabling exact rational
    /// comparisons of sum |d_i|^p against threshold^p.
    bool is_integer_p() const;

    const Rational& p() const;     // finite kinds only
    unsigned long p_integer() const;  // requires is_integer_p()
    double p_double() const;

    std::string to_wire() const;   // "inf", "2", "5/2", ...
    static NormSpec from_wire(const std::string& text);

    bool operator==(const NormSpec& other) const;

private:
    NormSpec(Kind k, Rational p) : kind_(k), p_(std::move(p)) {}
    Kind kind_;
    Rational p_;
};

struct LabeledPoint {
    std::vector<Rational> coords;
    int label = 1;  // class in [K], 1-based

    bool operator==(const LabeledPoint& other) const {
        return label == other.label && coords == other.coords;
    }
};

/// A distribution over n labeled points. Construction validates the simplex
/// invariant (weights > 0, summing exactly to 1), distinct support pairs,
/// consistent dimension and labels in [K].
class DiscreteDistribution {
public:
    DiscreteDistribution(std::vector<LabeledPoint> support,
                         std::vector<Rational> weights, int num_classes = 0);

    /// Uniform weights 1/n.
    static DiscreteDistribution uniform(std::vector<LabeledPoint> support,
                                        int num_classes = 0);

    int size() const { return static_cast<int>(support_.size()); }
    int dimension() const { return static_cast<int>(support_[0].coords.size()); }
    int num_classes() const { return num_classes_; }

    const std::vector<LabeledPoint>& support() const { return support_; }
    const LabeledPoint& point(int i) const { return support_[i]; }
    const std::vector<Rational>& weights() const { return weights_; }
    const Rational& weight(int i) const { return weights_[i]; }

    bool operator==(const DiscreteDistribution& other) const;

private:
    std::vector<LabeledPoint> support_;
    std::vector<Rational> weights_;
    int num_classes_;
};

/// A distribution together with the threat model it is analyzed under.
/// This triple is exactly what one dataset file stores.
struct Dataset {
    DiscreteDistribution dist;
    Rational epsilon;
    NormSpec norm;
};

struct ParseOptions {
    bool normalize = false;        // rescale weights to sum 1 instead of failing
    bool merge_duplicates = false; // sum weights of identical (coords, label)
};

Dataset parse_dataset(const std::string& bytes, const ParseOptions& opts = {});

/// Inverse of parse_dataset up to equality of the parsed value. All rationals
/// are emitted as exact strings, never as decimals.
std::string serialize_dataset(const Dataset& ds);

/// Exact rational vector from a JSON document: either a bare array or an
/// object with the named array field. Entries may be strings, integers or
/// decimal literals (converted exactly).
std::vector<Rational> parse_rational_list(const std::string& json_text,
                                          const std::string& field);

}  // namespace advgap

#endif
