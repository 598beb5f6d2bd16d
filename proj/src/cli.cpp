#include "heffter/cli.hpp"

#include <atomic>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "heffter/dispatch.hpp"
#include "heffter/exact_cover.hpp"
#include "heffter/oracle.hpp"
#include "heffter/serialize.hpp"
#include "heffter/skolem.hpp"
#include "heffter/verify.hpp"

namespace heffter {

namespace {

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::string cell;
    std::istringstream in(text);
    while (std::getline(in, cell, ',')) {
        std::size_t pos = 0;
        const int v = std::stoi(cell, &pos);
        if (pos != cell.size()) throw std::invalid_argument("bad integer '" + cell + "'");
        out.push_back(v);
    }
    return out;
}

void print_report(const VerificationReport& rep, std::ostream& out) {
    auto yn = [](bool b) { return b ? "yes" : "no"; };
    out << "modular: " << yn(rep.is_modular_heffter) << "\n"
        << "integer: " << yn(rep.is_integer_heffter) << "\n"
        << "shiftable: " << yn(rep.is_shiftable) << "\n"
        << "failures: " << rep.failures.size() << "\n";
    for (const VerificationFailure& f : rep.failures)
        out << "  " << f.property << (f.location.empty() ? "" : " at " + f.location) << ": " << f.detail << "\n";
}

int cmd_generate(Entry m, Entry n, const std::string& format_name, const std::string& require,
                 const std::string& output, std::ostream& out, std::ostream& err) {
    if (require != "any") {
        const HeffterClass cls = (require == "integer") ? HeffterClass::integer : HeffterClass::shiftable;
        const Necessity nec = assert_necessity(m, n, cls);
        if (!nec.allowed) {
            err << "no " << require << " array exists for " << m << "x" << n << ": " << nec.reason << "\n";
            return 1;
        }
    } else {
        const Necessity nec = assert_necessity(m, n, HeffterClass::modular);
        if (!nec.allowed) {
            err << "no array exists for " << m << "x" << n << ": " << nec.reason << "\n";
            return 1;
        }
    }

    const ConstructionResult result = construct(m, n);
    const VerificationReport rep = verify(result.array);
    if (!rep.is_modular_heffter || (require == "integer" && !rep.is_integer_heffter) ||
        (require == "shiftable" && !rep.is_shiftable)) {
        err << "generated array failed verification\n";
        print_report(rep, err);
        return 1;
    }

    const ArrayDocument doc = document_from(result);
    const Format format = format_from_name(format_name).value();
    if (output.empty()) out << serialize(doc, format);
    else write_document(output, doc, format);
    return 0;
}

int cmd_verify(const std::string& path, const std::string& format_name, std::ostream& out, std::ostream& err) {
    std::optional<Format> format;
    if (format_name != "auto") format = format_from_name(format_name);
    ArrayDocument doc;
    try {
        doc = read_document(path, format);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    const VerificationReport rep = verify(doc.grid());
    print_report(rep, out);
    return rep.is_modular_heffter ? 0 : 1;
}

struct ScanOutcome {
    Entry m = 0, n = 0;
    bool pass = false;
    bool integer = false;
    bool shiftable = false;
    std::string note;
};

ScanOutcome scan_one(Entry m, Entry n) {
    ScanOutcome o{m, n, false, false, false, ""};
    try {
        const ConstructionResult result = construct(m, n);
        const VerificationReport rep = verify(result.array);
        const bool class_matches = rep.is_modular_heffter == result.claimed.modular &&
                                   rep.is_integer_heffter == result.claimed.integer &&
                                   rep.is_shiftable == result.claimed.shiftable;
        const bool integer_expected = (m * n) % 4 == 0 || (m * n) % 4 == 3;
        const bool shiftable_expected = m % 2 == 0 && n % 2 == 0;
        o.integer = rep.is_integer_heffter;
        o.shiftable = rep.is_shiftable;
        o.pass = rep.is_modular_heffter && class_matches && rep.is_integer_heffter == integer_expected &&
                 rep.is_shiftable == shiftable_expected;
        if (!o.pass) {
            o.note = !rep.is_modular_heffter  ? "verification failed"
                     : !class_matches         ? "claimed class mismatch"
                                              : "class does not match parity rule";
            if (!rep.failures.empty())
                o.note += " (" + rep.failures.front().property + " " + rep.failures.front().location + ")";
        }
    } catch (const std::exception& e) {
        o.note = std::string("exception: ") + e.what();
    }
    return o;
}

int cmd_scan(Entry min, Entry max, int jobs, std::ostream& out, std::ostream& err) {
    if (min < 3 || max < min) {
        err << "scan: need 3 <= min <= max\n";
        return 2;
    }
    std::vector<std::pair<Entry, Entry>> sizes;
    for (Entry m = min; m <= max; ++m)
        for (Entry n = min; n <= max; ++n) sizes.emplace_back(m, n);

    std::vector<ScanOutcome> results(sizes.size());
    if (jobs <= 1) {
        for (std::size_t i = 0; i < sizes.size(); ++i) results[i] = scan_one(sizes[i].first, sizes[i].second);
    } else {
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            for (std::size_t i = next.fetch_add(1); i < sizes.size(); i = next.fetch_add(1))
                results[i] = scan_one(sizes[i].first, sizes[i].second);
        };
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (std::thread& t : pool) t.join();
    }

    std::size_t passes = 0, integers = 0, shiftables = 0, failures = 0;
    for (const ScanOutcome& o : results) {  // already in (m, n) order
        if (o.pass) ++passes;
        else {
            ++failures;
            out << "FAIL " << o.m << " " << o.n << ": " << o.note << "\n";
        }
        if (o.integer) ++integers;
        if (o.shiftable) ++shiftables;
    }
    out << "sizes: " << sizes.size() << "\n"
        << "pass: " << passes << "\n"
        << "integer: " << integers << "\n"
        << "shiftable: " << shiftables << "\n"
        << "failures: " << failures << "\n";
    return failures == 0 ? 0 : 1;
}

int cmd_search(Entry m, Entry n, const std::string& cls_name, int limit, std::ostream& out, std::ostream& err) {
    HeffterClass cls = HeffterClass::modular;
    if (cls_name == "integer") cls = HeffterClass::integer;
    else if (cls_name == "shiftable") cls = HeffterClass::shiftable;
    std::vector<HeffterCandidate> found;
    try {
        found = brute_force_search(static_cast<int>(m), static_cast<int>(n), cls, limit);
    } catch (const std::exception& e) {
        err << "search: " << e.what() << "\n";
        return 1;
    }
    for (const HeffterCandidate& c : found) out << serialize(document_from(c.grid()), Format::text);
    out << "found: " << found.size() << "\n";
    return 0;
}

int cmd_skolem_verify(const std::string& seq_text, const std::string& near, std::ostream& out, std::ostream& err) {
    SkolemSequence seq;
    try {
        seq.values = parse_int_list(seq_text);
        if (!near.empty()) seq.excluded = parse_int_list(near);
    } catch (const std::exception& e) {
        err << "skolem: " << e.what() << "\n";
        return 2;
    }
    seq.order = static_cast<int>(seq.values.size()) / 2 + static_cast<int>(seq.excluded.size());
    const SkolemCheck check = verify_skolem(seq);
    if (check.ok) {
        out << "pass (order " << seq.order << ")\n";
        return 0;
    }
    out << "fail: " << check.detail << "\n";
    return 1;
}

int cmd_skolem_find(int order, const std::string& near, std::ostream& out, std::ostream& err) {
    std::vector<int> excluded;
    try {
        if (!near.empty()) excluded = parse_int_list(near);
    } catch (const std::exception& e) {
        err << "skolem: " << e.what() << "\n";
        return 2;
    }
    const auto seq = find_skolem(order, excluded);
    if (!seq) {
        out << "none\n";
        return 1;
    }
    for (std::size_t i = 0; i < seq->values.size(); ++i) out << (i ? "," : "") << seq->values[i];
    out << "\n";
    return 0;
}

int cmd_triples(Entry n, bool wrap, unsigned seed, std::ostream& out, std::ostream& err) {
    std::optional<TriplePartition> part;
    try {
        part = triples_exact_cover(n, wrap, seed);
    } catch (const std::exception& e) {
        err << "triples: " << e.what() << "\n";
        return 1;
    }
    if (!part) {
        out << "none\n";
        return 1;
    }
    for (const Triple& t : part->triples) {
        if (t.mode == Triple::Mode::sum) out << t.a << " + " << t.b << " = " << t.c << "\n";
        else out << t.a << " + " << t.b << " + " << t.c << " = " << 6 * n + 1 << "\n";
    }
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Heffter array generator, verifier, and search oracle"};
    app.require_subcommand(1);

    Entry m = 0, n = 0;
    std::string format = "text", require = "any", output;
    CLI::App* generate = app.add_subcommand("generate", "construct and verify an m x n array");
    generate->add_option("m", m, "rows")->required();
    generate->add_option("n", n, "columns")->required();
    generate->add_option("--format", format)->check(CLI::IsMember({"text", "json", "csv"}));
    generate->add_option("--require", require)->check(CLI::IsMember({"any", "integer", "shiftable"}));
    generate->add_option("--output", output, "write to file instead of stdout");

    std::string verify_path, verify_format = "auto";
    CLI::App* verify_cmd = app.add_subcommand("verify", "check an array file");
    verify_cmd->add_option("file", verify_path)->required();
    verify_cmd->add_option("--format", verify_format)->check(CLI::IsMember({"auto", "text", "json", "csv"}));

    Entry scan_min = 3, scan_max = 0;
    int jobs = 1;
    CLI::App* scan = app.add_subcommand("scan", "construct and verify every size in a range");
    scan->add_option("--min", scan_min);
    scan->add_option("--max", scan_max)->required();
    scan->add_option("--jobs", jobs)->check(CLI::PositiveNumber);

    std::string search_class = "modular";
    int limit = 1;
    CLI::App* search = app.add_subcommand("search", "exhaustive search at tiny sizes");
    search->add_option("m", m)->required();
    search->add_option("n", n)->required();
    search->add_option("--class", search_class)->check(CLI::IsMember({"modular", "integer", "shiftable"}));
    search->add_option("--limit", limit)->check(CLI::PositiveNumber);

    CLI::App* skolem = app.add_subcommand("skolem", "Skolem sequence tools");
    skolem->require_subcommand(1);
    std::string seq_text, near;
    CLI::App* skolem_verify = skolem->add_subcommand("verify", "check a sequence");
    skolem_verify->add_option("sequence", seq_text, "comma-separated values")->required();
    skolem_verify->add_option("--near", near, "excluded values (comma-separated)");
    int order = 0;
    CLI::App* skolem_find = skolem->add_subcommand("find", "search for a sequence");
    skolem_find->add_option("order", order)->required()->check(CLI::PositiveNumber);
    skolem_find->add_option("--near", near, "excluded values (comma-separated)");

    Entry triples_n = 0;
    bool wrap = false;
    unsigned seed = 0;
    CLI::App* triples = app.add_subcommand("triples", "partition {1..3n} into difference triples");
    triples->add_option("n", triples_n)->required()->check(CLI::PositiveNumber);
    triples->add_flag("--modular", wrap, "also allow a+b+c = 6n+1");
    triples->add_option("--seed", seed, "shuffle candidate order");

    try {
        app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    try {
        if (generate->parsed()) return cmd_generate(m, n, format, require, output, out, err);
        if (verify_cmd->parsed()) return cmd_verify(verify_path, verify_format, out, err);
        if (scan->parsed()) return cmd_scan(scan_min, scan_max, jobs, out, err);
        if (search->parsed()) return cmd_search(m, n, search_class, limit, out, err);
        if (skolem->parsed()) {
            if (skolem_verify->parsed()) return cmd_skolem_verify(seq_text, near, out, err);
            return cmd_skolem_find(order, near, out, err);
        }
        if (triples->parsed()) return cmd_triples(triples_n, wrap, seed, out, err);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    err << "no command\n";
    return 2;
}

}  // namespace heffter
