#include "cli.hpp"

#include <fstream>
#include <iomanip>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "lcdring/constacyclic.hpp"
#include "lcdring/io.hpp"

namespace lcdring::cli {

using Json = nlohmann::ordered_json;

namespace {

enum class Format { Json, Csv, Text };

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Common {
    std::string format = "json";
    std::string ring;
    std::size_t n = 0;
    std::string gamma = "1";
    std::string generators;
    std::vector<std::string> codes;
    std::string poly;
    std::string metric;
    std::uint64_t budget = DistanceOptions{}.budget;
    std::optional<std::size_t> target;
    std::string strategy;
    bool distances = false;
    std::string factors;
    std::string vector;
};

Json to_ordered(const nlohmann::json& j) { return Json::parse(j.dump()); }

std::string slurp(const std::string& source) {
    const auto first = source.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && (source[first] == '{' || source[first] == '[')) return source;
    std::ifstream in(source);
    if (!in) throw UsageError("cannot read code file '" + source + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

nlohmann::json parse_json_text(const std::string& text) {
    try {
        return nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        fail(ErrorCode::Parse, std::string("invalid JSON: ") + e.what());
    }
}

Ring require_ring(const Common& c) {
    if (c.ring.empty()) throw UsageError("--ring is required");
    return make_ring(c.ring);
}

std::size_t require_n(const Common& c) {
    if (c.n == 0) throw UsageError("--n is required");
    return c.n;
}

RingMatrix read_generators(const Ring& ring, const std::string& text, std::size_t n) {
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '[' && text.find("[[") != std::string::npos &&
        text.find(';') == std::string::npos)
        return matrix_from_json(ring, parse_json_text(text), n);
    RingMatrix g = parse_matrix(ring, text);
    if (n != 0 && g.cols() != n) fail(ErrorCode::ShapeMismatch, "generator width does not match --n");
    return g;
}

LinearCode read_code_source(const std::string& source) { return code_from_json(parse_json_text(slurp(source))); }

/// A code from --code, --generators or --poly (in that order of preference).
LinearCode read_code(const Common& c) {
    if (!c.codes.empty()) {
        if (c.codes.size() != 1) throw UsageError("expected a single --code");
        return read_code_source(c.codes.front());
    }
    const Ring ring = require_ring(c);
    if (!c.generators.empty()) {
        RingMatrix g = read_generators(ring, c.generators, c.n);
        const std::size_t n = g.cols();
        return LinearCode(ring, n, std::move(g));
    }
    if (!c.poly.empty()) {
        const std::size_t n = require_n(c);
        return consta_code(ring, n, parse_element(ring, c.gamma), parse_poly(ring, c.poly)).code;
    }
    throw UsageError("a code is required: use --code, --generators or --poly");
}

Json code_object(const LinearCode& code) {
    Json j;
    j["ring"] = code.ring().spec();
    j["n"] = code.length();
    j["rank"] = code.rank();
    j["free"] = code.is_free();
    j["cardinality"] = big_to_string(code.cardinality());
    j["generators"] = to_ordered(matrix_json(code.reduced()));
    return j;
}

Metric pick_metric(const Common& c, const Ring& ring) {
    if (c.metric == "lee") return Metric::Lee;
    if (c.metric == "hamming") return Metric::Hamming;
    if (!c.metric.empty()) throw UsageError("--metric must be lee or hamming");
    return ring.is_integer_residue() && ring.cardinality() == 4 ? Metric::Lee : Metric::Hamming;
}

DistanceOptions distance_options(const Common& c) {
    DistanceOptions o;
    o.budget = c.budget;
    o.target = c.target;
    if (c.strategy == "full") o.strategy = SearchStrategy::FullEnumeration;
    else if (c.strategy == "bounded") o.strategy = SearchStrategy::BoundedWeightSearch;
    else if (!c.strategy.empty() && c.strategy != "auto") throw UsageError("--strategy must be auto, full or bounded");
    return o;
}

std::shared_ptr<const FactorSet> read_factor_set(const Common& c) {
    const Ring ring = require_ring(c);
    return std::make_shared<const FactorSet>(factor_set(ring, require_n(c), parse_element(ring, c.gamma)));
}

Json poly_list(const std::vector<RingPoly>& ps) {
    Json out = Json::array();
    for (const auto& f : ps) out.push_back(format_poly(f));
    return out;
}

// ---- verbs -------------------------------------------------------------

Json ring_info(const Common& c) {
    const Ring ring = require_ring(c);
    Json j;
    j["ring"] = ring.spec();
    switch (ring.kind()) {
    case RingKind::Chain: j["kind"] = ring.is_field() ? "field" : "chain"; break;
    case RingKind::LocalAlgebra: j["kind"] = "local_algebra"; break;
    case RingKind::Composite: j["kind"] = "composite"; break;
    }
    j["cardinality"] = std::to_string(ring.cardinality());
    j["characteristic"] = std::to_string(ring.characteristic());
    j["local"] = ring.is_local();
    if (ring.is_local()) j["residue_field_size"] = ring.residue_size();
    if (ring.is_chain()) {
        j["p"] = ring.p();
        j["s"] = ring.s();
        j["m"] = ring.m();
        if (ring.m() > 1) {
            j["modulus"] = format_poly(RingPoly(Ring::integers_mod(ring.p(), ring.s()), ring.modulus()));
        }
    }
    if (!ring.is_local()) {
        Json parts = Json::array();
        for (const auto& part : ring.components()) parts.push_back(part.spec());
        j["components"] = parts;
    }
    return j;
}

Json factor(const Common& c) {
    const auto fs = read_factor_set(c);
    Json j;
    j["ring"] = fs->ring.spec();
    j["n"] = fs->n;
    j["gamma"] = to_ordered(element_json(fs->ring, fs->gamma));
    j["factors"] = poly_list(fs->factors);
    std::vector<RingPoly> residues;
    for (const auto& f : fs->factors) residues.push_back(residue_poly(f));
    j["residue_factors"] = poly_list(residues);
    Json self = Json::array();
    for (const auto& f : fs->factors) self.push_back(is_self_reciprocal(f));
    j["self_reciprocal"] = self;
    return j;
}

Json hensel_lift(const Common& c) {
    const Ring ring = require_ring(c);
    const std::size_t n = require_n(c);
    const Elem gamma = parse_element(ring, c.gamma);
    const Ring field = ring.residue_field();
    std::vector<RingPoly> field_factors;
    if (c.factors.empty()) {
        field_factors = factor_constacyclic_modulus(field, n, ring.residue(gamma));
    } else {
        std::string_view rest = c.factors;
        while (!rest.empty()) {
            const auto cut = rest.find(';');
            field_factors.push_back(parse_poly(field, rest.substr(0, cut)));
            if (cut == std::string_view::npos) break;
            rest.remove_prefix(cut + 1);
        }
    }
    const FactorSet fs = hensel_lift_factors(field_factors, ring, n, gamma);
    Json rows = Json::array();
    for (std::size_t i = 0; i < fs.factors.size(); ++i) {
        Json row;
        row["residue"] = format_poly(residue_poly(fs.factors[i]));
        row["lift"] = format_poly(fs.factors[i]);
        rows.push_back(row);
    }
    return rows;
}

Json code_new(const Common& c) { return code_object(read_code(c)); }

Json code_dual(const Common& c) { return code_object(dual(read_code(c))); }

Json lcd_check(const Common& c) {
    const LinearCode code = read_code(c);
    const auto witness = hull_witness(code);
    Json j;
    j["lcd"] = !witness.has_value();
    j["witness"] = witness ? to_ordered(vector_json(code.ring(), *witness)) : Json(nullptr);
    j["rank"] = code.rank();
    j["free"] = code.is_free();
    j["cardinality"] = big_to_string(code.cardinality());
    return j;
}

Json distance(const Common& c) {
    const LinearCode code = read_code(c);
    const DistanceReport r = min_distance(code, pick_metric(c, code.ring()), distance_options(c));
    Json j;
    j["n"] = code.length();
    j["cardinality"] = big_to_string(code.cardinality());
    const Json report = distance_json(code.ring(), r);
    for (const auto& [k, v] : report.items()) j[k] = v;
    return j;
}

Json crt_compose(const Common& c) {
    if (c.codes.size() < 2) throw UsageError("crt-compose needs at least two --code arguments");
    std::vector<LinearCode> parts;
    for (const auto& src : c.codes) parts.push_back(read_code_source(src));
    const LinearCode composite = crt_compose_codes(parts);
    Json j = code_object(composite);
    j["lcd"] = is_lcd(composite);
    return j;
}

Json consta_row(const ConstacyclicCode& cc) {
    Json j;
    j["generator"] = format_poly(cc.gen);
    j["n"] = cc.length();
    j["gamma"] = to_ordered(element_json(cc.ring(), cc.gamma()));
    j["rank"] = cc.code.rank();
    j["cardinality"] = big_to_string(cc.code.cardinality());
    j["lcd"] = is_lcd_constacyclic(cc);
    j["reversible"] = is_reversible(cc);
    return j;
}

Json consta_enumerate(const Common& c) {
    Json rows = Json::array();
    for (const auto& cc : enumerate_lcd_constacyclic(read_factor_set(c))) rows.push_back(consta_row(cc));
    return rows;
}

Json consta_table(const Common& c) {
    const auto fs = read_factor_set(c);
    const Metric metric = pick_metric(c, fs->ring);
    const DistanceOptions options = distance_options(c);
    Json rows = Json::array();
    for (const auto& cc : enumerate_lcd_constacyclic(fs)) {
        Json row = consta_row(cc);
        if (c.distances) {
            const DistanceReport r = min_distance(cc.code, metric, options);
            row["metric"] = to_string(r.metric);
            if (r.status == DistanceStatus::Exact) row["distance"] = r.value;
            else row["distance"] = {r.lower, r.upper};
            row["status"] = to_string(r.status);
            row["strategy"] = to_string(r.strategy);
        }
        rows.push_back(row);
    }
    return rows;
}

std::string bit_string(const BitWord& w) {
    std::string s;
    for (auto b : w) s.push_back(b ? '1' : '0');
    return s;
}

Json gray(const Common& c) {
    if (!c.vector.empty()) {
        const Ring ring = require_ring(c);
        const RingVector v = parse_vector(ring, c.vector);
        Json j;
        j["vector"] = to_ordered(vector_json(ring, v));
        j["image"] = bit_string(gray_map(ring, v));
        j["lee_weight"] = weight(ring, v, Metric::Lee);
        return j;
    }
    const LinearCode code = read_code(c);
    const auto words = gray_image(code);
    Json j;
    j["words"] = words.size();
    j["length"] = 2 * code.length();
    j["linear"] = is_image_linear(words);
    j["min_distance"] = min_pairwise_distance(words);
    return j;
}

// ---- output ------------------------------------------------------------

std::string cell(const Json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_null()) return "";
    return v.dump();
}

std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + "\"";
}

std::vector<std::string> columns(const Json& rows) {
    std::vector<std::string> cols;
    for (const auto& row : rows)
        for (const auto& [k, _] : row.items())
            if (std::find(cols.begin(), cols.end(), k) == cols.end()) cols.push_back(k);
    return cols;
}

void write_csv(std::ostream& out, const Json& value) {
    const Json rows = value.is_array() ? value : Json::array({value});
    const auto cols = columns(rows);
    for (std::size_t i = 0; i < cols.size(); ++i) out << (i ? "," : "") << csv_quote(cols[i]);
    out << "\r\n";
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < cols.size(); ++i)
            out << (i ? "," : "") << (row.contains(cols[i]) ? csv_quote(cell(row[cols[i]])) : "");
        out << "\r\n";
    }
}

void write_text(std::ostream& out, const Json& value) {
    if (value.is_object()) {
        std::size_t width = 0;
        for (const auto& [k, _] : value.items()) width = std::max(width, k.size());
        for (const auto& [k, v] : value.items())
            out << std::left << std::setw(static_cast<int>(width)) << k << "  " << cell(v) << '\n';
        return;
    }
    const auto cols = columns(value);
    std::vector<std::size_t> widths;
    for (const auto& col : cols) widths.push_back(col.size());
    for (const auto& row : value)
        for (std::size_t i = 0; i < cols.size(); ++i)
            if (row.contains(cols[i])) widths[i] = std::max(widths[i], cell(row[cols[i]]).size());
    auto line = [&](auto&& get) {
        std::string s;
        for (std::size_t i = 0; i < cols.size(); ++i) {
            std::string c = get(i);
            if (i + 1 < cols.size()) c.resize(widths[i], ' ');
            s += (i ? "  " : "") + c;
        }
        out << s << '\n';
    };
    line([&](std::size_t i) { return cols[i]; });
    for (const auto& row : value)
        line([&](std::size_t i) { return row.contains(cols[i]) ? cell(row[cols[i]]) : std::string(); });
}

// One member or row per line, values compact.
void write_json(std::ostream& out, const Json& value) {
    if (value.is_object() && !value.empty()) {
        out << "{\n";
        std::size_t i = 0;
        for (const auto& [k, v] : value.items())
            out << "  " << Json(k).dump() << ": " << v.dump() << (++i < value.size() ? ",\n" : "\n");
        out << "}\n";
    } else if (value.is_array() && !value.empty()) {
        out << "[\n";
        for (std::size_t i = 0; i < value.size(); ++i) out << "  " << value[i].dump() << (i + 1 < value.size() ? ",\n" : "\n");
        out << "]\n";
    } else {
        out << value.dump() << '\n';
    }
}

void write(std::ostream& out, const Json& value, Format format) {
    switch (format) {
    case Format::Json: write_json(out, value); break;
    case Format::Csv: write_csv(out, value); break;
    case Format::Text: write_text(out, value); break;
    }
}

void write_error(std::ostream& err, std::string_view code, const std::string& message) {
    Json j;
    j["error"] = {{"code", std::string(code)}, {"message", message}};
    err << j.dump() << '\n';
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Linear complementary dual codes over finite commutative rings", "lcdring"};
    app.require_subcommand(1);
    Common c;

    using Handler = Json (*)(const Common&);
    std::vector<std::pair<CLI::App*, Handler>> verbs;

    auto verb = [&](const char* name, const char* description, Handler h) {
        CLI::App* sub = app.add_subcommand(name, description);
        sub->add_option("--format", c.format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
        verbs.emplace_back(sub, h);
        return sub;
    };
    auto ring_opt = [&](CLI::App* s) { s->add_option("--ring", c.ring, "ring spec, e.g. Z4 or GR(4,2)"); };
    auto family_opts = [&](CLI::App* s) {
        ring_opt(s);
        s->add_option("--n", c.n, "code length");
        s->add_option("--gamma", c.gamma, "unit gamma of X^n - gamma");
    };
    auto code_opts = [&](CLI::App* s) {
        family_opts(s);
        s->add_option("--generators", c.generators, "generator rows: \"1,0;0,1\" or a JSON array");
        s->add_option("--code", c.codes, "code JSON text or a file holding it");
        s->add_option("--poly", c.poly, "generator polynomial of a constacyclic code");
    };
    auto distance_opts = [&](CLI::App* s) {
        s->add_option("--metric", c.metric, "lee or hamming");
        s->add_option("--budget", c.budget, "largest code size enumerated exhaustively");
        s->add_option("--target", c.target, "highest weight level the bounded search explores");
        s->add_option("--strategy", c.strategy, "auto, full or bounded");
    };

    ring_opt(verb("ring-info", "describe a ring", ring_info));
    family_opts(verb("factor", "factor X^n - gamma into basic irreducibles", factor));
    {
        auto* s = verb("hensel-lift", "lift residue-field factors of X^n - gamma", hensel_lift);
        family_opts(s);
        s->add_option("--factors", c.factors, "residue factors separated by ';'");
    }
    code_opts(verb("code-new", "build a code and report its standard form", code_new));
    code_opts(verb("code-dual", "dual code", code_dual));
    code_opts(verb("lcd-check", "decide the LCD property", lcd_check));
    {
        auto* s = verb("distance", "minimum distance", distance);
        code_opts(s);
        distance_opts(s);
    }
    {
        auto* s = verb("crt-compose", "compose component codes into a code over their product", crt_compose);
        s->add_option("--code", c.codes, "component code JSON (repeat per component)");
    }
    family_opts(verb("consta-enumerate", "list the LCD constacyclic codes of length n", consta_enumerate));
    {
        auto* s = verb("consta-table", "LCD constacyclic codes with optional distances", consta_table);
        family_opts(s);
        distance_opts(s);
        s->add_flag("--distances", c.distances, "compute minimum distances");
    }
    {
        auto* s = verb("gray", "Gray image of a Z4 vector or code", gray);
        code_opts(s);
        s->add_option("--vector", c.vector, "a single vector, e.g. \"[1,2,3]\"");
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        write_error(err, "usage", e.what());
        return 1;
    }

    const Format format = c.format == "csv" ? Format::Csv : c.format == "text" ? Format::Text : Format::Json;
    for (const auto& [sub, handler] : verbs) {
        if (!sub->parsed()) continue;
        try {
            write(out, handler(c), format);
            return 0;
        } catch (const UsageError& e) {
            write_error(err, "usage", e.what());
            return 1;
        } catch (const Error& e) {
            write_error(err, to_string(e.code()), e.what());
            return e.code() == ErrorCode::Parse ? 1 : 2;
        }
    }
    return 1;
}

} // namespace lcdring::cli
