#include "hornlab/json_io.hpp"

#include "hornlab/errors.hpp"

#include <fstream>

namespace hornlab {

namespace {

std::vector<Rational> rationals_from_json(const Json& j) {
    std::vector<Rational> out;
    out.reserve(j.size());
    for (const auto& item : j) {
        out.push_back(parse_rational(item.get<std::string>()));
    }
    return out;
}

Json rationals_to_json(const std::vector<Rational>& v) {
    Json out = Json::array();
    for (const auto& x : v) {
        out.push_back(format_rational(x));
    }
    return out;
}

} // namespace

Json to_json(const StepQuantile& q) {
    return {{"breaks", rationals_to_json(q.breaks())}, {"values", rationals_to_json(q.values())}};
}

StepQuantile step_quantile_from_json(const Json& j) {
    return StepQuantile::make(rationals_from_json(j.at("breaks")),
                              rationals_from_json(j.at("values")));
}

Json to_json(const QuantileTriple& q) {
    return {{"q1", to_json(q.q1)}, {"q2", to_json(q.q2)}, {"q3", to_json(q.q3)}};
}

QuantileTriple quantile_triple_from_json(const Json& j) {
    return {step_quantile_from_json(j.at("q1")), step_quantile_from_json(j.at("q2")),
            step_quantile_from_json(j.at("q3"))};
}

Json to_json(const HornTriple& h) {
    return {{"n", h.n}, {"r", h.r}, {"I", h.I}, {"J", h.J}, {"K", h.K}};
}

HornTriple horn_triple_from_json(const Json& j) {
    return make_horn_triple(j.at("n").get<int>(), j.at("r").get<int>(),
                            j.at("I").get<std::vector<int>>(), j.at("J").get<std::vector<int>>(),
                            j.at("K").get<std::vector<int>>());
}

Json to_json(const MembershipVerdict& v) {
    Json out;
    switch (v.verdict) {
    case Verdict::member: out["verdict"] = "member"; break;
    case Verdict::nonmember: out["verdict"] = "nonmember"; break;
    case Verdict::inconclusive: out["verdict"] = "inconclusive-at-depth"; break;
    }
    out["depth"] = v.depth;
    if (v.violated) {
        out["margin"] = format_rational(v.violated->value);
        if (v.violated->witness) {
            out["witness"] = to_json(*v.violated->witness);
        }
        if (!v.violated->note.empty()) {
            out["note"] = v.violated->note;
        }
    }
    return out;
}

Json to_json(const ApproxReport& r) {
    Json distances = Json::array();
    for (const auto& d : r.distances) {
        distances.push_back(format_rational(d));
    }
    return {{"input", to_json(r.input)},
            {"epsilon", format_rational(r.epsilon)},
            {"n", r.n},
            {"r", r.r},
            {"strict_floor", r.strict_floor},
            {"output", to_json(r.output)},
            {"distances", distances},
            {"in_T_verified", r.in_T_verified}};
}

Json to_json(const SpectraSample& s) {
    return {{"n", s.n},     {"seed", s.seed},   {"alpha", s.alpha},
            {"beta", s.beta}, {"gamma", s.gamma}, {"residual", s.residual}};
}

SpectraSample spectra_sample_from_json(const Json& j) {
    SpectraSample s;
    s.n = j.at("n").get<int>();
    s.seed = j.at("seed").get<std::uint64_t>();
    s.alpha = j.at("alpha").get<std::vector<double>>();
    s.beta = j.at("beta").get<std::vector<double>>();
    s.gamma = j.at("gamma").get<std::vector<double>>();
    s.residual = j.value("residual", 0.0);
    return s;
}

Json to_json(const SoundnessReport& r) {
    Json out{{"depth", r.depth},
             {"margins_checked", r.margins_checked},
             {"min_margin", format_rational(r.min_margin)},
             {"violations", r.violations},
             {"map",
              {{"s", format_rational(r.normalized.scale)},
               {"a", format_rational(r.normalized.a)},
               {"b", format_rational(r.normalized.b)}}}};
    if (r.min_witness) {
        out["min_witness"] = to_json(*r.min_witness);
    }
    return out;
}

Json relation_to_json(const FiniteRelation& r) {
    Json likes = Json::array();
    for (int x = 0; x < r.size; ++x) {
        Json row = Json::array();
        for (int y = 0; y < r.size; ++y) {
            row.push_back(r.likes_xy(x, y));
        }
        likes.push_back(row);
    }
    Json out{{"likes", likes}};
    if (!r.labels.empty()) {
        out["labels"] = r.labels;
    }
    return out;
}

FiniteRelation relation_from_json(const Json& j) {
    const auto table = j.at("likes").get<std::vector<std::vector<bool>>>();
    std::vector<std::string> labels;
    if (j.contains("labels")) {
        labels = j.at("labels").get<std::vector<std::string>>();
    }
    return FiniteRelation::from_table(table, std::move(labels));
}

Json parse_json(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw PreconditionError(std::string("invalid JSON: ") + e.what());
    }
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw PreconditionError("cannot open file: " + path);
    }
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return parse_json(text);
}

} // namespace hornlab
