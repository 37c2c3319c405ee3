#include "specgraph/io.hpp"

#include <cctype>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "specgraph/oracle.hpp"

namespace specgraph::io {

using ordered_json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Ideal expression grammar

namespace {

struct Cursor {
    const std::string& text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    }
    bool at_end() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    void expect(char c) {
        skip_ws();
        if (pos >= text.size() || text[pos] != c)
            throw ParseError(std::string("expected '") + c + "'", pos);
        ++pos;
    }
    std::string identifier() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[pos])) ||
                text[pos] == '_'))
            ++pos;
        if (pos == start) throw ParseError("expected a variable name", start);
        return text.substr(start, pos - start);
    }
};

VarSet parse_term(const VariableContext& ctx, Cursor& cur) {
    VarSet support = 0;
    while (true) {
        std::size_t at = cur.pos;
        std::string name = cur.identifier();
        int idx = ctx.index_of(name);
        if (idx < 0) throw ParseError("unknown variable '" + name + "'", at);
        support |= var_bit(idx);  // repeated variables collapse (squarefree)
        if (cur.peek() != '*') break;
        cur.expect('*');
    }
    return support;
}

}  // namespace

std::vector<VarSet> parse_ideal_expression(const VariableContext& ctx,
                                           const std::string& text) {
    Cursor cur{text};
    cur.expect('(');
    std::vector<VarSet> supports;
    if (cur.peek() != ')') {
        supports.push_back(parse_term(ctx, cur));
        while (cur.peek() == ',') {
            cur.expect(',');
            supports.push_back(parse_term(ctx, cur));
        }
    }
    cur.expect(')');
    if (!cur.at_end()) throw ParseError("trailing input after ')'", cur.pos);
    return supports;
}

std::string render_ideal(const VariableContext& ctx, const SquarefreeIdeal& I) {
    if (I.is_unit()) return "(1)";
    if (I.is_zero()) return "(0)";
    std::string out = "(";
    bool first_gen = true;
    for (VarSet g : I.gens()) {
        if (!first_gen) out += ",";
        first_gen = false;
        bool first_var = true;
        for (int i : indices_of(g)) {
            if (!first_var) out += "*";
            first_var = false;
            out += ctx.name(i);
        }
    }
    return out + ")";
}

std::vector<std::string> render_prime(const VariableContext& ctx, VarSet p) {
    std::vector<std::string> out;
    for (int i : indices_of(p)) out.push_back(ctx.name(i));
    return out;
}

// ---------------------------------------------------------------------------
// Documents

SquarefreeIdeal InputDocument::the_ideal() const {
    if (I) return *I;
    return stanley_reisner(ctx, *complex);
}

InputDocument load_document(const std::string& json_text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_object()) throw InputError("document must be a JSON object");
    if (!doc.contains("variables") || !doc["variables"].is_array())
        throw InputError("missing \"variables\" array");

    std::vector<std::string> names;
    for (const auto& v : doc["variables"]) {
        if (!v.is_string()) throw InputError("variable names must be strings");
        names.push_back(v.get<std::string>());
    }
    VariableContext ctx = make_context(names);

    bool has_ideal = doc.contains("I");
    bool has_facets = doc.contains("facets");
    if (has_ideal == has_facets)
        throw InputError("exactly one of \"I\" and \"facets\" must be present");

    InputDocument out{ctx, std::nullopt, std::nullopt, std::nullopt};

    if (doc.contains("J") && !doc["J"].is_null()) {
        if (!doc["J"].is_string()) throw InputError("\"J\" must be a string or null");
        out.J = make_ideal(ctx, parse_ideal_expression(ctx, doc["J"].get<std::string>()));
    }

    if (has_ideal) {
        if (!doc["I"].is_string()) throw InputError("\"I\" must be a string");
        out.I = make_ideal(ctx, parse_ideal_expression(ctx, doc["I"].get<std::string>()));
    } else {
        if (!doc["facets"].is_array()) throw InputError("\"facets\" must be an array");
        std::vector<VarSet> facets;
        for (const auto& facet : doc["facets"]) {
            if (!facet.is_array()) throw InputError("each facet must be an array");
            VarSet f = 0;
            for (const auto& name : facet) {
                if (!name.is_string())
                    throw InputError("facet entries must be variable names");
                int idx = ctx.index_of(name.get<std::string>());
                if (idx < 0)
                    throw InputError("unknown variable in facet: " +
                                     name.get<std::string>());
                f |= var_bit(idx);
            }
            facets.push_back(f);
        }
        out.complex = make_complex(ctx, std::move(facets));
    }
    return out;
}

InputDocument load_document_file(const std::string& path) {
    std::ostringstream buffer;
    if (path == "-") {
        buffer << std::cin.rdbuf();
    } else {
        std::ifstream in(path);
        if (!in) throw InputError("cannot open input file: " + path);
        buffer << in.rdbuf();
    }
    return load_document(buffer.str());
}

// ---------------------------------------------------------------------------
// JSON model

namespace {

ordered_json primes_json(const VariableContext& ctx,
                         const std::vector<VarSet>& primes) {
    ordered_json out = ordered_json::array();
    for (VarSet p : primes) out.push_back(render_prime(ctx, p));
    return out;
}

ordered_json graph_json(const VariableContext& ctx, const PrimeGraph& g) {
    ordered_json out;
    out["kind"] = to_string(g.kind);
    out["vertices"] = primes_json(ctx, g.vertices);
    ordered_json edges = ordered_json::array();
    for (auto [i, j] : g.edges) edges.push_back(ordered_json::array({i, j}));
    out["edges"] = edges;
    return out;
}

ordered_json certificate_json(const ConnectivityCertificate& c) {
    ordered_json out;
    out["state"] = to_string(c.state);
    out["components"] = c.components;
    if (c.state == Connectivity::Connected) {
        ordered_json tree = ordered_json::array();
        for (auto [i, j] : c.spanning_tree)
            tree.push_back(ordered_json::array({i, j}));
        out["spanning_tree"] = tree;
    } else if (c.state == Connectivity::Disconnected) {
        out["bipartition_first"] = c.bipartition_first;
    }
    return out;
}

ordered_json verdict_json(const VariableContext& ctx, const Verdict& v) {
    ordered_json out;
    out["id"] = v.id;
    out["citation"] = v.citation;
    out["statement"] = v.statement;
    out["result"] = to_string(v.result);
    if (v.graph) out["graph"] = graph_json(ctx, *v.graph);
    if (v.certificate) out["connectivity"] = certificate_json(*v.certificate);
    if (!v.side_ideals.empty()) {
        ordered_json ideals;
        for (const auto& [name, ideal] : v.side_ideals)
            ideals[name] = render_ideal(ctx, ideal);
        out["side_ideals"] = ideals;
    }
    if (!v.side_numbers.empty()) {
        ordered_json numbers;
        for (const auto& [name, value] : v.side_numbers) numbers[name] = value;
        out["side_numbers"] = numbers;
    }
    if (!v.notes.empty()) out["notes"] = v.notes;
    return out;
}

ordered_json input_json(const InputDocument& doc) {
    ordered_json out;
    out["variables"] = doc.ctx.names();
    if (doc.complex) {
        ordered_json facets = ordered_json::array();
        for (VarSet f : doc.complex->facets)
            facets.push_back(render_prime(doc.ctx, f));
        out["facets"] = facets;
    } else {
        if (doc.J)
            out["J"] = render_ideal(doc.ctx, *doc.J);
        else
            out["J"] = nullptr;
        out["I"] = render_ideal(doc.ctx, *doc.I);
    }
    return out;
}

ordered_json report_json(const InputDocument& doc, const AnalysisReport& report) {
    ordered_json out;
    out["schema"] = "specgraph/1";
    out["input"] = input_json(doc);

    ordered_json dec;
    dec["c"] = report.decomposition.height_c;
    dec["d"] = report.decomposition.dim_d;
    std::vector<VarSet> primes;
    for (const MonomialPrime& p : report.decomposition.min_primes)
        primes.push_back(p.vars);
    dec["minimal_primes"] = primes_json(doc.ctx, primes);
    dec["I_d"] = render_ideal(doc.ctx, report.I_top);
    out["decomposition"] = dec;

    ordered_json verdicts = ordered_json::array();
    for (const Verdict& v : report.verdicts)
        verdicts.push_back(verdict_json(doc.ctx, v));
    out["verdicts"] = verdicts;
    return out;
}

// Text rendering is derived from the JSON model, never computed separately.

std::string join_names(const ordered_json& arr, const std::string& sep) {
    std::string out;
    for (const auto& v : arr) {
        if (!out.empty()) out += sep;
        out += v.is_string() ? v.get<std::string>() : v.dump();
    }
    return out;
}

void render_graph_text(std::ostream& os, const ordered_json& g) {
    os << "  graph (" << g["kind"].get<std::string>() << "):\n";
    const auto& vertices = g["vertices"];
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        os << "    [" << i << "] (" << join_names(vertices[i], ",") << ") --";
        std::string adj;
        for (const auto& e : g["edges"]) {
            std::size_t a = e[0].get<std::size_t>(), b = e[1].get<std::size_t>();
            if (a == i || b == i) {
                if (!adj.empty()) adj += " ";
                adj += std::to_string(a == i ? b : a);
            }
        }
        os << " {" << adj << "}\n";
    }
    if (vertices.empty()) os << "    (no vertices)\n";
}

std::string text_from_report(const ordered_json& j) {
    std::ostringstream os;
    const auto& in = j["input"];
    os << "variables: " << join_names(in["variables"], " ") << "\n";
    if (in.contains("J"))
        os << "J = " << (in["J"].is_null() ? "(0)" : in["J"].get<std::string>())
           << ", I = " << in["I"].get<std::string>() << "\n";
    const auto& dec = j["decomposition"];
    os << "height c = " << dec["c"] << ", dim d = " << dec["d"] << "\n";
    os << "minimal primes:";
    for (const auto& p : dec["minimal_primes"]) os << " (" << join_names(p, ",") << ")";
    os << "\nI_d = " << dec["I_d"].get<std::string>() << "\n";

    for (const auto& v : j["verdicts"]) {
        os << "\n[" << v["id"].get<std::string>() << "]";
        std::string cite = v["citation"].get<std::string>();
        if (!cite.empty()) os << " " << cite;
        os << "\n  result: " << v["result"].get<std::string>() << "\n  "
           << v["statement"].get<std::string>() << "\n";
        if (v.contains("graph")) render_graph_text(os, v["graph"]);
        if (v.contains("connectivity")) {
            const auto& c = v["connectivity"];
            os << "  connectivity: " << c["state"].get<std::string>()
               << ", components: " << c["components"].dump() << "\n";
            if (c.contains("spanning_tree"))
                os << "  spanning tree: " << c["spanning_tree"].dump() << "\n";
            if (c.contains("bipartition_first"))
                os << "  bipartition: " << c["bipartition_first"].dump()
                   << " vs rest\n";
        }
        if (v.contains("side_ideals"))
            for (const auto& [name, value] : v["side_ideals"].items())
                os << "  " << name << " = " << value.get<std::string>() << "\n";
        if (v.contains("side_numbers"))
            for (const auto& [name, value] : v["side_numbers"].items())
                os << "  " << name << " = " << value << "\n";
        if (v.contains("notes"))
            for (const auto& note : v["notes"])
                os << "  note: " << note.get<std::string>() << "\n";
    }
    return os.str();
}

std::string finish(const ordered_json& j, Format format,
                   std::string (*text_renderer)(const ordered_json&)) {
    if (format == Format::Json) return j.dump(2) + "\n";
    return text_renderer(j);
}

}  // namespace

std::string emit_report(const InputDocument& doc, const AnalysisReport& report,
                        Format format) {
    return finish(report_json(doc, report), format, &text_from_report);
}

std::string emit_graph(const InputDocument& doc, const PrimeGraph& g,
                       Format format) {
    ordered_json j;
    j["schema"] = "specgraph/1";
    j["input"] = input_json(doc);
    j["graph"] = graph_json(doc.ctx, g);
    j["connectivity"] = certificate_json(connectivity(g));
    return finish(j, format, +[](const ordered_json& j) {
        std::ostringstream os;
        render_graph_text(os, j["graph"]);
        os << "  connectivity: " << j["connectivity"]["state"].get<std::string>()
           << "\n";
        return os.str();
    });
}

std::string emit_min_primes(const InputDocument& doc,
                            const std::vector<MonomialPrime>& primes,
                            Format format) {
    ordered_json j;
    j["schema"] = "specgraph/1";
    j["input"] = input_json(doc);
    std::vector<VarSet> ps;
    for (const MonomialPrime& p : primes) ps.push_back(p.vars);
    j["minimal_primes"] = primes_json(doc.ctx, ps);
    return finish(j, format, +[](const ordered_json& j) {
        std::ostringstream os;
        for (const auto& p : j["minimal_primes"])
            os << "(" << join_names(p, ",") << ")\n";
        return os.str();
    });
}

std::string emit_split(const InputDocument& doc,
                       const std::vector<SquarefreeIdeal>& parts,
                       Format format) {
    ordered_json j;
    j["schema"] = "specgraph/1";
    j["input"] = input_json(doc);
    ordered_json arr = ordered_json::array();
    for (const SquarefreeIdeal& part : parts)
        arr.push_back(render_ideal(doc.ctx, part));
    j["components"] = arr;
    return finish(j, format, +[](const ordered_json& j) {
        std::ostringstream os;
        for (const auto& part : j["components"])
            os << part.get<std::string>() << "\n";
        return os.str();
    });
}

// ---------------------------------------------------------------------------
// Oracle cross-check

std::string run_verify(const InputDocument& doc) {
    std::ostringstream os;
    SquarefreeIdeal I = doc.the_ideal();
    SquarefreeIdeal J = doc.ambient();
    const VariableContext& ctx = doc.ctx;

    auto primes_of = [](const std::vector<MonomialPrime>& ps) {
        std::vector<VarSet> out;
        for (const MonomialPrime& p : ps) out.push_back(p.vars);
        return out;
    };

    auto check = [&](const std::string& what, bool ok) {
        os << (ok ? "OK   " : "FAIL ") << what << "\n";
        if (!ok) throw InternalError("oracle disagreement: " + what);
    };

    check("minimal primes of I",
          primes_of(minimal_primes(I)) ==
              primes_of(oracle::oracle_minimal_primes(I)));
    if (!J.is_zero())
        check("minimal primes of J",
              primes_of(minimal_primes(J)) ==
                  primes_of(oracle::oracle_minimal_primes(J)));

    PrimeGraph g51 = graph_def51(J, I);
    bool edges51_ok = true;
    for (std::size_t i = 0; i < g51.vertices.size(); ++i)
        for (std::size_t j = i + 1; j < g51.vertices.size(); ++j) {
            bool expected = oracle::oracle_edge_def51(
                J, I, MonomialPrime{g51.vertices[i]}, MonomialPrime{g51.vertices[j]});
            if (expected != g51.has_edge(static_cast<int>(i), static_cast<int>(j)))
                edges51_ok = false;
        }
    check("all def51 edges", edges51_ok);

    SquarefreeIdeal quotient = J.is_zero() ? I : J;
    PrimeGraph g61 = graph_def61(quotient);
    bool heights_ok = true;
    for (std::size_t i = 0; i < g61.vertices.size(); ++i)
        for (std::size_t j = i + 1; j < g61.vertices.size(); ++j) {
            MonomialPrime join{g61.vertices[i] | g61.vertices[j]};
            if (height_in_quotient(quotient, join) !=
                oracle::oracle_height_in_quotient(quotient, join))
                heights_ok = false;
        }
    check("all def61 join heights", heights_ok);
    check("height in quotient at m",
          height_in_quotient(quotient, MonomialPrime{ctx.full_set()}) ==
              oracle::oracle_height_in_quotient(quotient,
                                                MonomialPrime{ctx.full_set()}));

    SquarefreeIdeal total = J.is_zero() ? I : sum(J, I);
    ConnectivityCertificate punct = connectivity(graph_punctured(total));
    int oracle_count = oracle::oracle_punctured_components(total);
    int main_count = punct.state == Connectivity::Empty
                         ? -1
                         : static_cast<int>(punct.components.size());
    check("punctured component count", main_count == oracle_count);

    return os.str();
}

// ---------------------------------------------------------------------------
// CLI

namespace {

Format parse_format(const std::string& name) {
    if (name == "json") return Format::Json;
    if (name == "text") return Format::Text;
    throw InputError("unknown format: " + name);
}

int dispatch(const std::string& command, const std::string& input_path,
             const std::string& format_name, const std::string& kind) {
    InputDocument doc = load_document_file(input_path);
    Format format = parse_format(format_name);

    if (command == "analyze") {
        AnalysisReport report = analyze(doc.ctx, doc.ambient(), doc.the_ideal());
        std::cout << emit_report(doc, report, format);
    } else if (command == "min-primes") {
        std::cout << emit_min_primes(doc, minimal_primes(doc.the_ideal()), format);
    } else if (command == "split") {
        std::cout << emit_split(doc, split_Hc(doc.the_ideal()), format);
    } else if (command == "verify") {
        std::cout << run_verify(doc);
    } else if (command == "graph") {
        PrimeGraph g = [&] {
            if (kind == "def51") return graph_def51(doc.ambient(), doc.the_ideal());
            if (kind == "def61")
                return graph_def61(doc.J ? *doc.J : doc.the_ideal());
            if (kind == "punctured") {
                SquarefreeIdeal total = doc.J ? sum(*doc.J, doc.the_ideal())
                                              : doc.the_ideal();
                return graph_punctured(total);
            }
            if (kind == "facet-ridge") {
                if (!doc.complex)
                    throw InputError("facet-ridge graph needs a facet document");
                return facet_ridge_graph(doc.ctx.size(), *doc.complex);
            }
            throw InputError("unknown graph kind: " + kind);
        }();
        std::cout << emit_graph(doc, g, format);
    } else {
        throw InputError("unknown subcommand: " + command);
    }
    return 0;
}

}  // namespace

int run(const std::vector<std::string>& args) {
    CLI::App app{"connectedness and indecomposability analysis for squarefree "
                 "monomial ideals"};
    app.require_subcommand(1);

    std::string input_path = "-";
    std::string format_name = "text";
    std::string kind;
    std::string command;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("-i,--input", input_path, "input JSON file, - for stdin");
        sub->add_option("--format", format_name, "json or text");
        sub->callback([&, sub] { command = sub->get_name(); });
    };

    add_common(app.add_subcommand("analyze", "full cited report"));
    add_common(app.add_subcommand("min-primes", "minimal primes of I"));
    auto* graph_cmd = app.add_subcommand("graph", "build one graph");
    graph_cmd->add_option("--kind", kind, "def51|def61|punctured|facet-ridge")
        ->required();
    add_common(graph_cmd);
    add_common(app.add_subcommand("split", "component ideals of the top graph"));
    add_common(app.add_subcommand("verify", "exhaustive oracle cross-check"));

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    try {
        return dispatch(command, input_path, format_name, kind);
    } catch (const CapacityError& e) {
        std::cerr << "capacity: " << e.what() << "\n";
        return 2;
    } catch (const InternalError& e) {
        std::cerr << "internal: " << e.what() << "\n";
        return 3;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace specgraph::io
