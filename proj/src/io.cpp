#include "gfc/io.hpp"

#include <cstdint>
#include <fstream>
#include <sstream>

#include "gfc/errors.hpp"

namespace gfc::io {

namespace {

constexpr const char* kRConvention = "paper_Rn_over_n";

std::vector<std::string> rational_strings(const std::vector<Rational>& values) {
    std::vector<std::string> out;
    out.reserve(values.size());
    for (const auto& v : values) out.push_back(v.str());
    return out;
}

std::vector<Rational> parse_rationals(const Json& values, const std::string& what) {
    if (!values.is_array()) throw ParseError(what + " must be an array of rational strings");
    std::vector<Rational> out;
    out.reserve(values.size());
    for (const auto& v : values) {
        if (!v.is_string())
            throw ParseError(what + " entries must be rational strings, got: " + v.dump());
        out.push_back(Rational::parse(v.get<std::string>()));
    }
    return out;
}

Rational param_or(const Json& params, const std::string& key, const Rational& fallback) {
    if (!params.contains(key)) return fallback;
    if (!params.at(key).is_string())
        throw ParseError("family param \"" + key + "\" must be a rational string");
    return Rational::parse(params.at(key).get<std::string>());
}

std::vector<Rational> family_alpha_values(const Json& alpha, int order) {
    const std::string family = alpha.value("family", "");
    Json params = alpha.contains("params") ? alpha.at("params") : Json::object();
    if (family == "exp") {
        return alpha_from_lambda(Rational(1), Rational(0), Rational(1), order);
    } else if (family == "hermite") {
        return alpha_from_lambda(param_or(params, "lambda1", Rational(1)), Rational(0),
                                 param_or(params, "alpha1", Rational(1)), order);
    } else if (family == "chebyshev1" || family == "log") {
        return alpha_from_lambda(Rational(0), param_or(params, "lambda2", Rational(2)),
                                 param_or(params, "alpha1", Rational(1)), order);
    } else if (family == "ultraspherical") {
        if (!params.contains("lambda1") || !params.contains("lambda2"))
            throw ParseError("ultraspherical alpha needs params lambda1 and lambda2");
        return alpha_from_lambda(param_or(params, "lambda1", Rational(0)),
                                 param_or(params, "lambda2", Rational(0)),
                                 param_or(params, "alpha1", Rational(1)), order);
    } else if (family == "binomial") {
        // F(t) = (1 - b t)^(-a): the product rule with lambda1 = a*b,
        // lambda2 = b and alpha_1 = a*b.
        if (!params.contains("a") || !params.contains("b"))
            throw ParseError("binomial alpha needs params a and b");
        Rational a = param_or(params, "a", Rational(0));
        Rational b = param_or(params, "b", Rational(0));
        return alpha_from_lambda(a * b, b, a * b, order);
    }
    throw ParseError("unknown alpha family: \"" + family + "\"");
}

}  // namespace

ResultDoc ResultDoc::parse(const std::string& text) {
    ResultDoc doc;
    try {
        doc.doc = Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad result document: ") + e.what());
    }
    return doc;
}

std::string ResultDoc::serialize() const { return doc.dump(2) + "\n"; }

GenFunSpec spec_from_json(const Json& j) {
    try {
        if (!j.is_object()) throw ParseError("spec must be a JSON object");
        if (!j.contains("order") || !j.at("order").is_number_integer())
            throw ParseError("spec needs an integer \"order\"");
        const int order = j.at("order").get<int>();
        if (order < 1) throw InvalidSpec("order must be >= 1");
        if (!j.contains("alpha") || !j.contains("r"))
            throw ParseError("spec needs \"alpha\" and \"r\"");

        const Json& alpha = j.at("alpha");
        std::vector<Rational> alpha_values;
        const std::string alpha_kind = alpha.value("kind", "");
        if (alpha_kind == "list") {
            alpha_values = parse_rationals(alpha.at("values"), "alpha.values");
            if (static_cast<int>(alpha_values.size()) != order + 1)
                throw InvalidSpec("alpha list must carry exactly order+1 values");
        } else if (alpha_kind == "family") {
            alpha_values = family_alpha_values(alpha, order);
        } else {
            throw ParseError("alpha.kind must be \"list\" or \"family\"");
        }

        const Json& r = j.at("r");
        if (r.value("kind", "") != "list") throw ParseError("r.kind must be \"list\"");
        if (r.value("convention", "") != kRConvention)
            throw InvalidSpec(std::string("r.convention must be \"") + kRConvention + "\"");
        std::vector<Rational> r_values = parse_rationals(r.at("values"), "r.values");
        if (static_cast<int>(r_values.size()) > order)
            throw InvalidSpec("r list longer than the order");
        r_values.resize(static_cast<size_t>(order), Rational(0));

        return GenFunSpec(std::move(alpha_values), std::move(r_values));
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad spec file: ") + e.what());
    }
}

Json spec_to_json(const GenFunSpec& spec) {
    Json j;
    j["order"] = spec.order();
    j["alpha"] = {{"kind", "list"}, {"values", rational_strings(spec.alpha_list())}};
    j["r"] = {{"kind", "list"},
              {"values", rational_strings(spec.r_list())},
              {"convention", kRConvention}};
    return j;
}

GenFunSpec load_spec_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open spec file: " + path.string());
    Json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("bad JSON in " + path.string() + ": " + e.what());
    }
    return spec_from_json(j);
}

namespace {

Json poly_json(const Poly& p) {
    return Json(rational_strings(p.coeffs()));
}

Json witness_json(const CheckWitness& w) {
    Json j;
    j["check"] = w.check;
    if (w.n >= 0) j["n"] = w.n;
    if (w.k >= 0) j["k"] = w.k;
    j["residual"] = poly_json(w.residual);
    return j;
}

Json certificate_json(const CertificateBundle& bundle) {
    Json j;
    j["ttrr_valid_to"] = bundle.ttrr_valid_to;
    j["gf7_ok"] = check_status_name(bundle.gf7_ok);
    j["gf9_ok"] = check_status_name(bundle.gf9_ok);
    j["gf10_ok"] = check_status_name(bundle.gf10_ok);
    j["gf11_ok"] = check_status_name(bundle.gf11_ok);
    j["gf12_ok"] = check_status_name(bundle.gf12_ok);
    j["symmetry_ok"] = check_status_name(bundle.symmetry_ok);
    j["solricati_ok"] = check_status_name(bundle.solricati_ok);
    j["r_quadratic_ok"] = check_status_name(bundle.r_quadratic_ok);
    j["rescale_ok"] = check_status_name(bundle.rescale_ok);
    j["witnesses"] = Json::array();
    for (const auto& w : bundle.witnesses) j["witnesses"].push_back(witness_json(w));
    return j;
}

Json params_json(const FamilyParams& p) {
    Json j;
    j["kind"] = std::string(family_kind_name(p.kind));
    j["lambda1"] = p.lambda1.str();
    j["lambda2"] = p.lambda2.str();
    j["t1"] = p.t1.str();
    if (p.kind == FamilyKind::Ultraspherical) j["lambda"] = p.lambda.str();
    j["scale_sq"] = p.scale_sq.str();
    return j;
}

// Per-n table of recurrence data. Cells whose defining sequences do not
// exist stay empty strings.
Json table_json(const GenFunSpec& spec, const ClassifyOutcome& outcome) {
    Json rows = Json::array();
    if (!outcome.rec) return rows;
    const Recurrence& rec = *outcome.rec;
    std::optional<DerivedSequences> ds;
    if (rec.passed() && !spec.alpha(1).is_zero() && !spec.r(2).is_zero())
        ds = derived_sequences(spec, rec);
    const int last = static_cast<int>(rec.betas.size()) - 1;
    for (int n = 0; n <= last; ++n) {
        Json row;
        row["n"] = n;
        row["beta"] = rec.betas[static_cast<size_t>(n)].str();
        row["omega"] = n >= 1 ? rec.omegas[static_cast<size_t>(n)].str() : "";
        row["a"] = (ds && n <= ds->a_max()) ? ds->a[static_cast<size_t>(n)].str() : "";
        row["c"] = (ds && n >= 1 && n <= ds->c_max()) ? ds->c[static_cast<size_t>(n)].str() : "";
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace

ResultDoc expand_result(const GenFunSpec& spec, const PolySeq& ps) {
    ResultDoc out;
    out.doc["command"] = "expand";
    out.doc["order"] = spec.order();
    Json polys = Json::array();
    for (int n = 0; n <= ps.order(); ++n) polys.push_back(poly_json(ps.at(n)));
    out.doc["polys"] = std::move(polys);
    return out;
}

ResultDoc classify_result(const GenFunSpec& spec, const ClassifyOutcome& outcome) {
    ResultDoc out;
    const Classification& cls = outcome.cls;
    out.doc["command"] = "classify";
    out.doc["order"] = spec.order();
    out.doc["verdict"] = std::string(verdict_name(cls.verdict));
    if (!cls.diagnostic.empty()) out.doc["diagnostic"] = cls.diagnostic;
    if (cls.params) out.doc["params"] = params_json(*cls.params);
    out.doc["certificate"] = certificate_json(cls.certificate);
    out.doc["table"] = table_json(spec, outcome);
    return out;
}

ResultDoc verify_result(const GenFunSpec& spec,
                        const std::vector<std::string>& requested,
                        const std::map<std::string, CheckResult>& results) {
    ResultDoc out;
    out.doc["command"] = "verify";
    out.doc["order"] = spec.order();
    Json checks;
    Json witnesses = Json::array();
    for (const auto& name : requested) {
        const CheckResult& r = results.at(name);
        checks[name] = check_status_name(r.status);
        for (const auto& w : r.witnesses) {
            Json jw = witness_json(w);
            jw["for"] = name;
            witnesses.push_back(std::move(jw));
        }
    }
    out.doc["checks"] = std::move(checks);
    out.doc["witnesses"] = std::move(witnesses);
    return out;
}

ResultDoc scan_result(const GenFunSpec& spec, const std::string& knob,
                      const std::vector<ScanRow>& rows) {
    ResultDoc out;
    out.doc["command"] = "scan";
    out.doc["order"] = spec.order();
    out.doc["knob"] = knob;
    Json jrows = Json::array();
    for (const auto& row : rows) {
        Json jr;
        jr["value"] = row.value.str();
        jr["verdict"] = std::string(verdict_name(row.verdict));
        if (row.first_failure_n)
            jr["first_failure_n"] = *row.first_failure_n;
        else
            jr["first_failure_n"] = nullptr;
        jrows.push_back(std::move(jr));
    }
    out.doc["rows"] = std::move(jrows);
    return out;
}

ResultDoc bench_result(const std::vector<BenchRow>& rows) {
    ResultDoc out;
    out.doc["command"] = "bench";
    Json jrows = Json::array();
    for (const auto& row : rows) {
        Json jr;
        jr["order"] = row.order;
        jr["rep"] = row.rep;
        jr["micros"] = row.micros;
        jr["hash"] = row.hash;
        jrows.push_back(std::move(jr));
    }
    out.doc["rows"] = std::move(jrows);
    return out;
}

namespace {

// RFC 4180 quoting.
std::string csv_cell(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

void csv_row(std::string& out, const std::vector<std::string>& cells) {
    for (size_t i = 0; i < cells.size(); ++i) {
        if (i) out += ',';
        out += csv_cell(cells[i]);
    }
    out += '\n';
}

}  // namespace

std::string decimal_approx(const Rational& r, int digits) {
    if (digits < 0) digits = 0;
    BigInt num = r.numerator();
    BigInt den = r.denominator();
    bool negative = num < 0;
    if (negative) num = -num;
    BigInt scale = 1;
    for (int i = 0; i < digits; ++i) scale *= 10;
    // round half away from zero
    BigInt scaled = (num * scale * 2 + den) / (den * 2);
    BigInt whole = scaled / scale;
    BigInt frac = scaled % scale;
    std::string out = negative && !(whole == 0 && frac == 0) ? "-" : "";
    out += whole.str();
    if (digits > 0) {
        std::string f = frac.str();
        out += "." + std::string(static_cast<size_t>(digits) - f.size(), '0') + f;
    }
    return out;
}

std::string classify_csv(const GenFunSpec& spec, const ClassifyOutcome& outcome,
                         int decimal_digits) {
    const bool approx = decimal_digits >= 0;
    std::string out;
    std::vector<std::string> header = {"n", "beta", "omega", "a", "c"};
    if (approx)
        for (const char* col : {"beta_approx", "omega_approx", "a_approx", "c_approx"})
            header.push_back(col);
    csv_row(out, header);
    if (!outcome.rec) return out;
    const Recurrence& rec = *outcome.rec;
    std::optional<DerivedSequences> ds;
    if (rec.passed() && !spec.alpha(1).is_zero() && !spec.r(2).is_zero())
        ds = derived_sequences(spec, rec);
    const int last = static_cast<int>(rec.betas.size()) - 1;
    for (int n = 0; n <= last; ++n) {
        std::optional<Rational> beta = rec.betas[static_cast<size_t>(n)];
        std::optional<Rational> omega, a, c;
        if (n >= 1) omega = rec.omegas[static_cast<size_t>(n)];
        if (ds && n <= ds->a_max()) a = ds->a[static_cast<size_t>(n)];
        if (ds && n >= 1 && n <= ds->c_max()) c = ds->c[static_cast<size_t>(n)];
        auto cell = [](const std::optional<Rational>& v) { return v ? v->str() : ""; };
        auto cell_approx = [&](const std::optional<Rational>& v) {
            return v ? decimal_approx(*v, decimal_digits) : "";
        };
        std::vector<std::string> row = {std::to_string(n), cell(beta), cell(omega), cell(a),
                                        cell(c)};
        if (approx)
            for (const auto& v : {beta, omega, a, c}) row.push_back(cell_approx(v));
        csv_row(out, row);
    }
    return out;
}

std::string scan_csv(const std::vector<ScanRow>& rows, int decimal_digits) {
    const bool approx = decimal_digits >= 0;
    std::string out;
    std::vector<std::string> header = {"knob_value", "verdict", "first_failure_n"};
    if (approx) header.push_back("knob_value_approx");
    csv_row(out, header);
    for (const auto& row : rows) {
        std::vector<std::string> cells = {
            row.value.str(), std::string(verdict_name(row.verdict)),
            row.first_failure_n ? std::to_string(*row.first_failure_n) : "-"};
        if (approx) cells.push_back(decimal_approx(row.value, decimal_digits));
        csv_row(out, cells);
    }
    return out;
}

std::string bench_csv(const std::vector<BenchRow>& rows) {
    std::string out;
    csv_row(out, {"order", "rep", "micros", "hash"});
    for (const auto& row : rows)
        csv_row(out, {std::to_string(row.order), std::to_string(row.rep),
                      std::to_string(row.micros), row.hash});
    return out;
}

void write_atomic(const std::filesystem::path& path, const std::string& content) {
    namespace fs = std::filesystem;
    fs::path dir = path.parent_path();
    if (dir.empty()) dir = ".";
    fs::path tmp = dir / (path.filename().string() + ".tmp");
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw Error("cannot write " + tmp.string());
        out << content;
        if (!out.flush()) throw Error("short write to " + tmp.string());
    }
    fs::rename(tmp, path);
}

std::string polyseq_hash(const PolySeq& ps) {
    uint64_t h = 1469598103934665603ull;  // FNV offset basis
    auto feed = [&](const std::string& s) {
        for (unsigned char c : s) {
            h ^= c;
            h *= 1099511628211ull;
        }
        h ^= 0x1f;
        h *= 1099511628211ull;
    };
    for (int n = 0; n <= ps.order(); ++n)
        for (const auto& c : ps.at(n).coeffs()) feed(c.str());
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
}

}  // namespace gfc::io
