// epkit: exact generalized inverses in rings with involution, with a
// verification battery that checks every registered characterization of
// the baseline property against corpora of ring elements.
//
// Exit codes: 0 success, 1 integrity fault / disagreement / violation,
// 2 usage (bad flags, parse failure, enumeration cap).

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "epkit/geninv.hpp"
#include "epkit/registry.hpp"
#include "epkit/verifier.hpp"

using nlohmann::ordered_json;
using namespace epkit;

namespace {

std::uint64_t enum_cap() {
    const char* raw = std::getenv("EPKIT_ENUM_CAP");
    if (!raw || !*raw) return kDefaultEnumCap;
    char* end = nullptr;
    unsigned long long v = std::strtoull(raw, &end, 10);
    if (!end || *end != '\0' || v == 0)
        throw UsageError(std::string("EPKIT_ENUM_CAP must be a positive integer, got \"") +
                         raw + "\"");
    return static_cast<std::uint64_t>(v);
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot read input path: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

void write_out(const std::string& bytes, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << bytes;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw UsageError("cannot open output path: " + out_path);
    out << bytes;
}

struct ElementArgs {
    std::string ring_text;
    std::string element_text;
    std::string input_path;
    std::string format = "text";
    std::string out_path;
};

Element resolve_element(const ElementArgs& args) {
    RingSpec ring = parse_ring_spec(args.ring_text);
    if (args.element_text.empty() == args.input_path.empty())
        throw UsageError("provide exactly one of --element or --input");
    std::string text =
        args.element_text.empty() ? slurp(args.input_path) : args.element_text;
    return parse_element(ring, trim(text));
}

ordered_json info_json(const InverseInfo& info) {
    ordered_json j;
    j["exists"] = info.value.has_value();
    if (info.value) {
        j["value"] = element_to_string(*info.value);
        j["certificates"] = ordered_json::array();
        for (const auto& cert : info.certificates)
            j["certificates"].push_back({{"equation", cert.equation},
                                         {"holds", cert.holds}});
    } else {
        j["absence"] = info.absence;
    }
    return j;
}

void info_text(std::ostream& out, const char* label, const InverseInfo& info) {
    out << label << ": ";
    if (!info.value) {
        out << "does not exist (" << info.absence << ")\n";
        return;
    }
    out << element_to_string(*info.value) << "\n";
    out << "  certificates:";
    for (const auto& cert : info.certificates)
        out << " " << cert.equation << (cert.holds ? " ok" : " FAIL");
    out << "\n";
}

int cmd_inverse(const ElementArgs& args) {
    Element a = resolve_element(args);
    InverseBundle bundle = inverse_bundle(a, enum_cap());
    if (args.format == "json") {
        ordered_json j;
        j["schema"] = "epkit-inverse/1";
        j["ring"] = a.ring.name();
        j["element"] = element_to_string(a);
        j["inverses"]["one"] = info_json(bundle.one);
        j["inverses"]["moore-penrose"] = info_json(bundle.mp);
        j["inverses"]["group"] = info_json(bundle.group);
        j["inverses"]["core"] = info_json(bundle.core);
        j["inverses"]["dual-core"] = info_json(bundle.dual_core);
        write_out(j.dump(2) + "\n", args.out_path);
        return 0;
    }
    std::ostringstream out;
    out << "ring: " << a.ring.name() << "\n";
    out << "element: " << element_to_string(a) << "\n";
    info_text(out, "one-inverse", bundle.one);
    info_text(out, "moore-penrose", bundle.mp);
    info_text(out, "group", bundle.group);
    info_text(out, "core", bundle.core);
    info_text(out, "dual-core", bundle.dual_core);
    write_out(out.str(), args.out_path);
    return 0;
}

int cmd_ep_check(const ElementArgs& args, unsigned n_bound) {
    Element a = resolve_element(args);
    std::uint64_t cap = enum_cap();
    InverseBundle bundle = inverse_bundle(a, cap);
    EpContext c = make_ep_context(a, cap);
    std::uint64_t applicable = 0, matching = 0;
    struct Row {
        const Characterization* ch;
        CharVerdict verdict;
    };
    std::vector<Row> rows;
    for (const auto& ch : characterizations()) {
        CharVerdict v = evaluate_characterization(ch, c);
        if (v.value != Tri::Inapplicable) {
            ++applicable;
            if ((v.value == Tri::True) == c.ep) ++matching;
        }
        rows.push_back({&ch, std::move(v)});
    }
    bool consensus = matching == applicable;

    if (args.format == "json") {
        ordered_json j;
        j["schema"] = "epkit-epcheck/1";
        j["ring"] = a.ring.name();
        j["element"] = element_to_string(a);
        j["baseline"]["moore-penrose"] = info_json(bundle.mp);
        j["baseline"]["group"] = info_json(bundle.group);
        j["baseline"]["core"] = info_json(bundle.core);
        j["baseline"]["dual-core"] = info_json(bundle.dual_core);
        j["baseline"]["ep"] = c.ep;
        j["power-commutation"] = ordered_json::array();
        for (unsigned n = 1; n <= n_bound; ++n)
            j["power-commutation"].push_back({{"n", n}, {"value", tri_name(n_ep(a, n, cap))}});
        j["characterizations"] = ordered_json::array();
        for (const Row& row : rows) {
            ordered_json entry;
            entry["id"] = row.ch->id;
            entry["condition"] = row.ch->condition;
            entry["gate"] = gate_name(row.ch->gate);
            entry["value"] = tri_name(row.verdict.value);
            if (row.verdict.value != Tri::Inapplicable)
                entry["provenance"] = provenance_name(row.verdict.provenance);
            if (row.verdict.witness)
                entry["witness"] = element_to_string(*row.verdict.witness);
            j["characterizations"].push_back(std::move(entry));
        }
        j["applicable"] = applicable;
        j["matching"] = matching;
        j["consensus"] = consensus;
        write_out(j.dump(2) + "\n", args.out_path);
        return consensus ? 0 : 1;
    }

    std::ostringstream out;
    out << "ring: " << a.ring.name() << "\n";
    out << "element: " << element_to_string(a) << "\n";
    out << "baseline\n";
    auto line = [&](const char* label, const InverseInfo& info) {
        out << "  " << label << ": ";
        if (info.value)
            out << element_to_string(*info.value) << "\n";
        else
            out << "does not exist (" << info.absence << ")\n";
    };
    line("moore-penrose", bundle.mp);
    line("group", bundle.group);
    line("core", bundle.core);
    line("dual-core", bundle.dual_core);
    out << "  ep: " << (c.ep ? "true" : "false") << "\n";
    out << "power-commutation\n";
    for (unsigned n = 1; n <= n_bound; ++n)
        out << "  n=" << n << ": " << tri_name(n_ep(a, n, cap)) << "\n";
    out << "characterizations (value, provenance)\n";
    std::size_t width = 0;
    for (const Row& row : rows) width = std::max(width, row.ch->id.size());
    for (const Row& row : rows) {
        out << "  " << row.ch->id << std::string(width - row.ch->id.size() + 2, ' ')
            << tri_name(row.verdict.value);
        if (row.verdict.value != Tri::Inapplicable)
            out << "  " << provenance_name(row.verdict.provenance);
        if (row.verdict.witness)
            out << "  witness " << element_to_string(*row.verdict.witness);
        out << "\n";
    }
    if (consensus)
        out << "consensus: all " << applicable
            << " applicable characterizations agree with the baseline\n";
    else
        out << "consensus: " << (applicable - matching)
            << " characterizations disagree with the baseline\n";
    write_out(out.str(), args.out_path);
    return consensus ? 0 : 1;
}

SuiteSelection parse_suite(const std::string& text) {
    if (text == "all") return SuiteSelection::everything();
    std::vector<std::string> ids;
    std::string piece;
    std::istringstream in(text);
    while (std::getline(in, piece, ',')) {
        piece = trim(piece);
        if (!piece.empty()) ids.push_back(piece);
    }
    return SuiteSelection::only(std::move(ids));
}

int cmd_verify(const std::string& ring_text, const std::string& suite_text, bool random,
               std::uint64_t seed, std::uint64_t count, const std::string& format,
               const std::string& out_path) {
    RingSpec ring = parse_ring_spec(ring_text);
    std::uint64_t cap = enum_cap();
    Corpus corpus =
        random ? build_random_corpus(ring, seed, count) : build_corpus(ring, cap);
    TheoremReport report = run_suite(corpus, parse_suite(suite_text), cap);
    write_out(emit_report(report, format == "json"), out_path);
    std::cerr << "wall-time: " << report.wall_seconds << "s\n";
    return (report.disagreements > 0 || report.violations > 0) ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact generalized inverses and their verification battery"};
    app.require_subcommand(1);

    ElementArgs inv_args;
    CLI::App* inv = app.add_subcommand(
        "inverse", "compute the certified inverse bundle of one element");
    inv->add_option("--ring", inv_args.ring_text, "ring spec, e.g. Mat:2:Q or Zmod:6")
        ->required();
    inv->add_option("--element", inv_args.element_text, "element literal");
    inv->add_option("--input", inv_args.input_path, "path to an element file");
    inv->add_option("--format", inv_args.format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    inv->add_option("--out", inv_args.out_path, "write output to this path");

    ElementArgs ep_args;
    unsigned n_bound = 3;
    CLI::App* ep = app.add_subcommand(
        "ep-check", "evaluate every characterization at one element");
    ep->add_option("--ring", ep_args.ring_text, "ring spec")->required();
    ep->add_option("--element", ep_args.element_text, "element literal");
    ep->add_option("--input", ep_args.input_path, "path to an element file");
    ep->add_option("--n", n_bound, "power-commutation bound")->check(CLI::Range(1u, 8u));
    ep->add_option("--format", ep_args.format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    ep->add_option("--out", ep_args.out_path, "write output to this path");

    std::string ver_ring, ver_suite = "all", ver_format = "text", ver_out;
    bool ver_random = false;
    std::uint64_t ver_seed = 0, ver_count = 100;
    CLI::App* ver = app.add_subcommand(
        "verify", "run a characterization suite over a corpus");
    ver->add_option("--ring", ver_ring, "ring spec")->required();
    ver->add_option("--suite", ver_suite,
                    "\"all\" or a comma-separated list of characterization ids");
    CLI::Option* random_opt =
        ver->add_flag("--random", ver_random, "random corpus instead of exhaustive");
    ver->add_option("--seed", ver_seed, "random corpus seed")->needs(random_opt);
    ver->add_option("--count", ver_count, "random corpus size")->needs(random_opt);
    ver->add_option("--format", ver_format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    ver->add_option("--out", ver_out, "write the report to this path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (inv->parsed()) return cmd_inverse(inv_args);
        if (ep->parsed()) return cmd_ep_check(ep_args, n_bound);
        return cmd_verify(ver_ring, ver_suite, ver_random, ver_seed, ver_count, ver_format,
                          ver_out);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const IntegrityFault& e) {
        std::cerr << "integrity fault: " << e.what() << "\n";
        return 1;
    }
}
