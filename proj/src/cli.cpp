#include "lagobs/cli.hpp"

#include <algorithm>
#include <iomanip>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "lagobs/catalog.hpp"
#include "lagobs/criteria.hpp"
#include "lagobs/json_io.hpp"
#include "lagobs/specseq.hpp"

namespace lagobs::cli {

namespace {

enum class Format { Text, Json };

struct Config {
    int g = 0, m1 = 0, m2 = 0;
    Format format = Format::Text;
    int bound = 6;
    std::string profile_path;
    std::string witness_path;
    int maslov = 0;
    std::optional<int> nu;
    bool oracle = false;
    std::int64_t cap = kDefaultSearchCap;
    bool verbose = false;
};

std::string family_tuple(const IsoparametricFamily& f) {
    return "(" + std::to_string(f.g) + "," + std::to_string(f.m1) + "," + std::to_string(f.m2) + ")";
}

void print_report_row(std::ostream& out, const CaseReport& r) {
    out << std::setw(3) << r.family.g << std::setw(5) << r.family.n << std::setw(5) << r.family.m1 << std::setw(5)
        << r.family.m2 << "  " << to_string(r.status) << '\n';
}

void print_table_header(std::ostream& out) {
    out << std::setw(3) << "g" << std::setw(5) << "n" << std::setw(5) << "m1" << std::setw(5) << "m2"
        << "  status\n";
}

void print_report_text(std::ostream& out, const CaseReport& r) {
    print_table_header(out);
    print_report_row(out, r);
    for (const auto& s : r.justification) out << "  [" << to_string(s.source) << "] " << s.anchor << ": " << s.detail << '\n';
    if (r.intersects_real_form) out << "  meets the real form S^n under every Hamiltonian isotopy\n";
    if (r.volume_lower_bound)
        out << "  volume of any Hamiltonian image >= " << std::setprecision(15) << *r.volume_lower_bound << '\n';
}

void print_verdict_text(std::ostream& out, const std::string& label, const VerdictRecord& rec) {
    const auto& v = rec.verdict;
    out << label << ": " << to_string(v.kind) << " (page " << v.page << ")\n";
    std::visit(
        [&](const auto& w) {
            using W = std::decay_t<decltype(w)>;
            if constexpr (std::is_same_v<W, ContradictionWitness>) {
                out << "  slot " << *v.slot << " forced to dim >= " << w.lower_bound << '\n';
                for (const auto& l : w.chain)
                    out << "  page " << l.page << " (shift " << l.shift << "): " << l.lo_before << " - hi["
                        << l.below_degree << "]=" << to_string(l.below) << " - hi[" << l.above_degree
                        << "]=" << to_string(l.above) << " -> " << l.lo_after << '\n';
            } else if constexpr (std::is_same_v<W, FeasibleWitness>) {
                for (const auto& rv : w.ranks) {
                    out << "  page " << rv.r << " ranks:";
                    for (auto a : rv.ranks) out << ' ' << a;
                    out << '\n';
                }
            } else if constexpr (std::is_same_v<W, InfeasibleWitness>) {
                out << "  " << w.completions << " completion(s), " << w.explored_states << " page states explored\n";
            }
        },
        v.witness);
}

int cmd_classify(const Config& c, std::ostream& out) {
    const CaseReport r = classify(validate_family(c.g, c.m1, c.m2));
    if (c.format == Format::Json)
        out << report_to_json(r).dump(2) << '\n';
    else
        print_report_text(out, r);
    return kExitOk;
}

int cmd_classify_all(const Config& c, std::ostream& out) {
    std::vector<CaseReport> reports;
    for (const auto& f : enumerate_families(c.bound)) reports.push_back(classify(f));

    if (c.format == Format::Json) {
        json arr = json::array();
        for (const auto& r : reports) arr.push_back(report_to_json(r));
        out << arr.dump(2) << '\n';
        return kExitOk;
    }
    print_table_header(out);
    std::vector<std::string> unresolved;
    for (const auto& r : reports) {
        print_report_row(out, r);
        if (r.status == CaseStatus::Unresolved) unresolved.push_back(family_tuple(r.family));
    }
    out << "unresolved: ";
    for (std::size_t i = 0; i < unresolved.size(); ++i) out << (i ? ", " : "") << unresolved[i];
    out << '\n';
    return kExitOk;
}

int cmd_catalog(const Config& c, std::ostream& out) {
    json arr = json::array();
    for (const auto& f : enumerate_families(c.bound)) arr.push_back(gauss_image_to_json(gauss_image_data(f)));
    if (c.format == Format::Json) {
        out << arr.dump(2) << '\n';
        return kExitOk;
    }
    out << std::setw(3) << "g" << std::setw(5) << "n" << std::setw(5) << "m1" << std::setw(5) << "m2" << std::setw(5)
        << "N_L" << std::setw(4) << "nu" << "  orientable\n";
    for (const auto& f : enumerate_families(c.bound))
        out << std::setw(3) << f.g << std::setw(5) << f.n << std::setw(5) << f.m1 << std::setw(5) << f.m2
            << std::setw(5) << minimal_maslov(f) << std::setw(4) << collapse_step(f) << "  "
            << (orientable(f) ? "yes" : "no") << '\n';
    return kExitOk;
}

int cmd_narrow_check(const Config& c, std::ostream& out, std::ostream& err) {
    const BettiProfile h = profile_from_json(read_json_file(c.profile_path));
    if (c.maslov < 3)
        throw DomainError("lifted Floer theory not defined at minimal Maslov number " + std::to_string(c.maslov) +
                          " (requires N_L >= 3)");
    const int nu = c.nu.value_or((h.top() + 1) / c.maslov);

    std::vector<std::pair<std::string, VerdictRecord>> results;
    results.emplace_back("propagation", VerdictRecord{h, c.maslov, nu, propagate_narrow(h, c.maslov, h.top(), nu)});
    if (c.oracle) {
        const bool bounded = std::all_of(h.slots().begin(), h.slots().end(), [](const DimBound& b) { return b.bounded(); });
        if (bounded)
            results.emplace_back("oracle", VerdictRecord{h, c.maslov, nu, oracle_narrow_feasible(h, c.maslov, nu, c.cap)});
        else
            err << "oracle skipped: profile has unbounded slots\n";
    }

    if (c.format == Format::Json) {
        if (results.size() == 1) {
            out << verdict_to_json(results.front().second).dump(2) << '\n';
        } else {
            json arr = json::array();
            for (const auto& [label, rec] : results) arr.push_back(verdict_to_json(rec));
            out << arr.dump(2) << '\n';
        }
    } else {
        if (c.verbose)
            for (const auto& page : propagate_bounds(h, c.maslov, nu)) {
                out << "bounds on page " << page.r << ':';
                for (const auto& b : page.slots) out << ' ' << to_string(b);
                out << '\n';
            }
        for (const auto& [label, rec] : results) print_verdict_text(out, label, rec);
    }
    return kExitOk;
}

int cmd_wide_check(const Config& c, std::ostream& out) {
    const BettiProfile h = profile_from_json(read_json_file(c.profile_path));
    const bool wide = wide_check_biran_cornea(h, c.maslov);
    std::vector<int> tested;
    for (int i = c.maslov - 1; i <= h.top(); i += c.maslov) tested.push_back(i);
    if (c.format == Format::Json) {
        out << json{{"wide", wide}, {"maslov", c.maslov}, {"tested_degrees", tested}}.dump(2) << '\n';
    } else {
        out << (wide ? "wide" : "not certified wide") << " (tested degrees:";
        for (int i : tested) out << ' ' << i;
        out << ")\n";
    }
    return kExitOk;
}

int cmd_replay(const Config& c, std::ostream& out) {
    const json doc = read_json_file(c.witness_path);
    std::vector<VerdictRecord> records;
    if (doc.is_array()) {
        for (const auto& j : doc) records.push_back(verdict_from_json(j));
    } else {
        records.push_back(verdict_from_json(doc));
    }
    if (records.empty()) throw FormatError("no verdicts to replay");

    bool all_ok = true;
    for (const auto& r : records) {
        const bool ok = replay_witness(r.verdict, r.profile, r.maslov, r.nu);
        out << to_string(r.verdict.kind) << ": " << (ok ? "replayed" : "REPLAY FAILED") << '\n';
        all_ok = all_ok && ok;
    }
    return all_ok ? kExitOk : kExitDomain;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Config c;
    CLI::App app{"Floer-theoretic obstruction checker for Gauss images of isoparametric hypersurfaces", "lagobs"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_flag("-v,--verbose", c.verbose, "Verbose diagnostics");

    const std::map<std::string, Format> formats{{"text", Format::Text}, {"json", Format::Json}};
    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", c.format, "Output format (text|json)")
            ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    };
    auto add_family = [&](CLI::App* sub) {
        sub->add_option("--g", c.g, "Number of distinct principal curvatures")->required();
        sub->add_option("--m1", c.m1, "First multiplicity")->required();
        sub->add_option("--m2", c.m2, "Second multiplicity")->required();
    };

    auto* classify_cmd = app.add_subcommand("classify", "Classify one isoparametric family");
    add_family(classify_cmd);
    add_format(classify_cmd);

    auto* all_cmd = app.add_subcommand("classify-all", "Classify every family with m1 + m2 <= bound");
    all_cmd->add_option("--bound", c.bound, "Multiplicity bound B")->check(CLI::Range(2, 1 << 16));
    add_format(all_cmd);

    auto* catalog_cmd = app.add_subcommand("catalog", "Dump Gauss-image data for families with m1 + m2 <= bound");
    catalog_cmd->add_option("--bound", c.bound, "Multiplicity bound B")->check(CLI::Range(2, 1 << 16));
    add_format(catalog_cmd);

    auto* narrow_cmd = app.add_subcommand("narrow-check", "Test whether a Betti profile admits vanishing lifted Floer homology");
    narrow_cmd->add_option("--profile", c.profile_path, "Profile JSON file")->required();
    narrow_cmd->add_option("--maslov", c.maslov, "Minimal Maslov number N_L")->required();
    narrow_cmd->add_option("--nu", c.nu, "Collapse index (default floor((n+1)/N_L))")->check(CLI::NonNegativeNumber);
    narrow_cmd->add_flag("--oracle", c.oracle, "Also run the exhaustive rank search");
    narrow_cmd->add_option("--cap", c.cap, "Oracle search cap on total dimension")->check(CLI::NonNegativeNumber);
    add_format(narrow_cmd);

    auto* wide_cmd = app.add_subcommand("wide-check", "Biran-Cornea wideness test on a Betti profile of L");
    wide_cmd->add_option("--profile", c.profile_path, "Profile JSON file")->required();
    wide_cmd->add_option("--maslov", c.maslov, "Minimal Maslov number N_L")->required();
    add_format(wide_cmd);

    auto* replay_cmd = app.add_subcommand("replay", "Replay a stored verdict witness");
    replay_cmd->add_option("witness", c.witness_path, "Verdict JSON file")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitDomain;
    }

    try {
        if (*classify_cmd) return cmd_classify(c, out);
        if (*all_cmd) return cmd_classify_all(c, out);
        if (*catalog_cmd) return cmd_catalog(c, out);
        if (*narrow_cmd) return cmd_narrow_check(c, out, err);
        if (*wide_cmd) return cmd_wide_check(c, out);
        if (*replay_cmd) return cmd_replay(c, out);
    } catch (const FormatError& e) {
        err << "input error: " << e.what() << '\n';
        return kExitFormat;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        for (const auto* sub : app.get_subcommands()) err << sub->help();
        return kExitDomain;
    }
    return kExitDomain;
}

}  // namespace lagobs::cli
