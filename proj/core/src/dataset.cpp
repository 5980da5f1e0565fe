#include "advgap/dataset.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include <nlohmann/json.hpp>

#include "advgap/errors.hpp"
#include "exact_json.hpp"

namespace advgap {

NormSpec NormSpec::p_norm(const Rational& p) {
    if (p <= 1)
        throw ParseError("norm requires p > 1, got p = " + to_string(p));
    return NormSpec(Kind::P, p);
}

bool NormSpec::is_integer_p() const {
    return kind_ == Kind::P && p_.get_den() == 1;
}

const Rational& NormSpec::p() const {
    if (kind_ != Kind::P) throw ParseError("p() on the infinity norm");
    return p_;
}

unsigned long NormSpec::p_integer() const {
    if (!is_integer_p()) throw ParseError("p_integer() on a non-integer norm");
    return p_.get_num().get_ui();
}

double NormSpec::p_double() const { return p_.get_d(); }

std::string NormSpec::to_wire() const {
    return is_infinity() ? "inf" : to_string(p_);
}

NormSpec NormSpec::from_wire(const std::string& text) {
    if (text == "inf" || text == "Inf" || text == "infinity" || text == "oo")
        return infinity();
    return p_norm(parse_rational(text));
}

bool NormSpec::operator==(const NormSpec& other) const {
    if (kind_ != other.kind_) return false;
    return is_infinity() || p_ == other.p_;
}

DiscreteDistribution::DiscreteDistribution(std::vector<LabeledPoint> support,
                                           std::vector<Rational> weights,
                                           int num_classes)
    : support_(std::move(support)), weights_(std::move(weights)) {
    if (support_.empty()) throw ParseError("empty support");
    if (weights_.size() != support_.size())
        throw ParseError("support/weight size mismatch");

    const std::size_t dim = support_[0].coords.size();
    int max_label = 0;
    for (const auto& pt : support_) {
        if (pt.coords.size() != dim)
            throw ParseError("dimension mismatch in support points");
        if (pt.label < 1)
            throw ParseError("labels are 1-based, got " + std::to_string(pt.label));
        max_label = std::max(max_label, pt.label);
    }
    num_classes_ = num_classes > 0 ? num_classes : max_label;
    if (max_label > num_classes_)
        throw ParseError("label " + std::to_string(max_label) + " out of range [" +
                         std::to_string(num_classes_) + "]");

    Rational sum(0);
    for (const auto& w : weights_) {
        if (w <= 0) throw ParseError("weights must be strictly positive");
        sum += w;
    }
    if (sum != 1)
        throw ParseError("weights sum to " + to_string(sum) + " != 1");

    // distinct (coords, label) pairs
    auto sorted = support_;
    std::sort(sorted.begin(), sorted.end(),
              [](const LabeledPoint& a, const LabeledPoint& b) {
                  if (a.label != b.label) return a.label < b.label;
                  return std::lexicographical_compare(
                      a.coords.begin(), a.coords.end(), b.coords.begin(),
                      b.coords.end());
              });
    for (std::size_t i = 1; i < sorted.size(); ++i)
        if (sorted[i] == sorted[i - 1])
            throw ParseError("duplicate (coords, label) pair in support");
}

DiscreteDistribution DiscreteDistribution::uniform(
    std::vector<LabeledPoint> support, int num_classes) {
    const std::size_t n = support.size();
    if (n == 0) throw ParseError("empty support");
    std::vector<Rational> w(n, Rational(1, static_cast<long>(n)));
    return DiscreteDistribution(std::move(support), std::move(w), num_classes);
}

bool DiscreteDistribution::operator==(const DiscreteDistribution& other) const {
    return num_classes_ == other.num_classes_ && weights_ == other.weights_ &&
           support_ == other.support_;
}

namespace {

using detail::ExactJson;

Rational rational_field(const ExactJson& v, const char* what) {
    if (v.is_number() || v.is_string()) return parse_rational(v.text);
    throw ParseError(std::string("expected rational for ") + what);
}

int int_field(const ExactJson& v, const char* what) {
    if (!v.is_number()) throw ParseError(std::string("expected integer for ") + what);
    const Rational q = parse_rational(v.text);
    if (q.get_den() != 1)
        throw ParseError(std::string("expected integer for ") + what);
    return static_cast<int>(q.get_num().get_si());
}

}  // namespace

Dataset parse_dataset(const std::string& bytes, const ParseOptions& opts) {
    const ExactJson root = detail::parse_exact_json(bytes);
    if (!root.is_object()) throw ParseError("dataset must be a JSON object");

    const Rational epsilon = rational_field(root.at("epsilon"), "epsilon");
    if (epsilon <= 0) throw ParseError("epsilon must be positive");

    const ExactJson& norm_v = root.at("norm");
    if (!norm_v.is_string() && !norm_v.is_number())
        throw ParseError("norm must be \"inf\" or a rational p");
    const NormSpec norm = NormSpec::from_wire(norm_v.text);

    const ExactJson& points_v = root.at("points");
    if (!points_v.is_array()) throw ParseError("points must be an array");
    const ExactJson& labels_v = root.at("labels");
    if (!labels_v.is_array()) throw ParseError("labels must be an array");
    if (points_v.array.size() != labels_v.array.size())
        throw ParseError("points/labels length mismatch");
    if (points_v.array.empty()) throw ParseError("empty support");

    std::vector<LabeledPoint> support;
    support.reserve(points_v.array.size());
    for (std::size_t i = 0; i < points_v.array.size(); ++i) {
        const ExactJson& row = points_v.array[i];
        if (!row.is_array()) throw ParseError("each point must be an array");
        LabeledPoint pt;
        pt.coords.reserve(row.array.size());
        for (const auto& c : row.array) pt.coords.push_back(rational_field(c, "coordinate"));
        pt.label = int_field(labels_v.array[i], "label");
        support.push_back(std::move(pt));
    }

    std::vector<Rational> weights;
    if (root.has("weights") && !root.at("weights").is_null()) {
        const ExactJson& w_v = root.at("weights");
        if (!w_v.is_array() || w_v.array.size() != support.size())
            throw ParseError("weights must be an array of length n");
        for (const auto& w : w_v.array) weights.push_back(rational_field(w, "weight"));
    } else {
        weights.assign(support.size(),
                       Rational(1, static_cast<long>(support.size())));
    }

    int num_classes = 0;
    if (root.has("num_classes")) num_classes = int_field(root.at("num_classes"), "num_classes");

    if (opts.merge_duplicates) {
        std::vector<LabeledPoint> merged_pts;
        std::vector<Rational> merged_w;
        for (std::size_t i = 0; i < support.size(); ++i) {
            bool found = false;
            for (std::size_t j = 0; j < merged_pts.size(); ++j) {
                if (merged_pts[j] == support[i]) {
                    merged_w[j] += weights[i];
                    found = true;
                    break;
                }
            }
            if (!found) {
                merged_pts.push_back(support[i]);
                merged_w.push_back(weights[i]);
            }
        }
        support = std::move(merged_pts);
        weights = std::move(merged_w);
    }

    if (opts.normalize) {
        Rational sum(0);
        for (const auto& w : weights) sum += w;
        if (sum <= 0) throw ParseError("weights sum to zero, cannot normalize");
        for (auto& w : weights) w /= sum;
    }

    return Dataset{DiscreteDistribution(std::move(support), std::move(weights),
                                        num_classes),
                   epsilon, norm};
}

std::vector<Rational> parse_rational_list(const std::string& json_text,
                                          const std::string& field) {
    const ExactJson root = detail::parse_exact_json(json_text);
    const ExactJson* arr = nullptr;
    if (root.is_array())
        arr = &root;
    else if (root.is_object() && root.has(field))
        arr = &root.at(field);
    else
        throw ParseError("expected a JSON array or an object with '" + field + "'");
    if (!arr->is_array()) throw ParseError("'" + field + "' must be an array");
    std::vector<Rational> out;
    out.reserve(arr->array.size());
    for (const auto& v : arr->array) out.push_back(rational_field(v, field.c_str()));
    return out;
}

std::string serialize_dataset(const Dataset& ds) {
    nlohmann::ordered_json j;
    j["epsilon"] = to_string(ds.epsilon);
    j["norm"] = ds.norm.to_wire();
    nlohmann::ordered_json points = nlohmann::ordered_json::array();
    nlohmann::ordered_json labels = nlohmann::ordered_json::array();
    nlohmann::ordered_json weights = nlohmann::ordered_json::array();
    for (int i = 0; i < ds.dist.size(); ++i) {
        const auto& pt = ds.dist.point(i);
        nlohmann::ordered_json row = nlohmann::ordered_json::array();
        for (const auto& c : pt.coords) row.push_back(to_string(c));
        points.push_back(std::move(row));
        labels.push_back(pt.label);
        weights.push_back(to_string(ds.dist.weight(i)));
    }
    j["points"] = std::move(points);
    j["labels"] = std::move(labels);
    j["weights"] = std::move(weights);
    j["num_classes"] = ds.dist.num_classes();
    return j.dump(2) + "\n";
}

}  // namespace advgap
