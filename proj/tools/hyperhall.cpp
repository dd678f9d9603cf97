// hyperhall: command-line front end for the scheme and Hall-subset engine.
//
// Exit codes: 0 success, 1 the queried property is false, 2 input error,
// 3 internal invariant failure.

#include <CLI11.hpp>

#include <hyperhall/hyperhall.hpp>
#include <hyperhall/io/catalogue.hpp>
#include <hyperhall/io/report.hpp>
#include <hyperhall/io/text_format.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace hh = hyperhall;
namespace io = hyperhall::io;

namespace
{

enum Exit
{
    kOk = 0,
    kFalse = 1,
    kInput = 2,
    kInternal = 3,
};

struct Loaded
{
    std::string name;
    hh::AssociationScheme scheme;
};

std::string read_text(const std::string &path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw hh::Error(hh::ErrorKind::SyntaxError, "cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

/// Reads a scheme file or a group file (converted to its thin scheme).
Loaded load(const std::string &path)
{
    const std::string text = read_text(path);
    if (io::detect_kind(text) == io::FileKind::Group) {
        io::GroupFile g = io::parse_group(text);
        return {g.name.empty() ? path : g.name, hh::from_group(g.table)};
    }
    io::SchemeFile f = io::parse_scheme(text);
    for (const auto &w : f.warnings)
        std::cerr << "warning: " << path << ": " << w << "\n";
    return {f.name.empty() ? path : f.name, hh::validate_scheme(f.matrix)};
}

hh::ElementSubset parse_ids(const hh::AssociationScheme &s, const std::string &text)
{
    std::vector<int> ids;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        int value = -1;
        try {
            value = std::stoi(item, &used);
        } catch (const std::exception &) {
            used = 0;
        }
        if (used == 0 || value < 0 || value >= s.rank())
            throw hh::Error(hh::ErrorKind::SyntaxError, "bad relation id '" + item + "'");
        ids.push_back(value);
    }
    return s.hypergroup().subset(ids);
}

hh::SchemeClosedSubset closed_from_ids(const hh::AssociationScheme &s, const std::string &text)
{
    return hh::make_scheme_closed(s, parse_ids(s, text));
}

std::string describe(const hh::SchemeClosedSubset &t)
{
    return hh::to_string(t.relations.elements()) + " valency " + std::to_string(t.valency);
}

void print_certificate(const hh::AssociationScheme &s, const hh::HallCertificate &c)
{
    std::cout << "pi: " << hh::to_string(c.pi) << "\n";
    std::cout << "O_pi: " << describe(c.o_pi) << "\n";
    std::cout << "thin quotient order: " << c.thin_quotient_group.order() << "\n";
    std::cout << "hall: " << describe(c.hall) << "\n";
    std::cout << "n_T: " << c.hall.valency << "\n";
    std::cout << "index: " << c.index << "\n";
    std::cout << "verified: " << (hh::pi_predicates(s, c.hall, c.pi).hall_pi_subset ? "yes" : "no") << "\n";
}

int cmd_validate(const std::string &path)
{
    try {
        Loaded l = load(path);
        const auto &s = l.scheme;
        std::cout << "valid association scheme\n";
        std::cout << "name: " << l.name << "\n";
        std::cout << "points: " << s.n_points() << "\n";
        std::cout << "rank: " << s.rank() << "\n";
        std::cout << "valencies:";
        for (int v : s.valencies())
            std::cout << " " << v;
        std::cout << "\n";
        std::cout << "thin: " << (hh::is_thin(s.hypergroup()) ? "yes" : "no") << "\n";
        return kOk;
    } catch (const hh::Error &e) {
        switch (e.kind()) {
        case hh::ErrorKind::NotPartition:
        case hh::ErrorKind::IdentityViolation:
        case hh::ErrorKind::StarViolation:
        case hh::ErrorKind::RegularityViolation:
        case hh::ErrorKind::NotAGroup:
            std::cout << "not an association scheme: " << e.what() << "\n";
            if (!e.witness().empty()) {
                std::cout << "witness:";
                for (int w : e.witness())
                    std::cout << " " << w;
                std::cout << "\n";
            }
            return kFalse;
        default:
            throw;
        }
    }
}

int cmd_closed(const std::string &path)
{
    Loaded l = load(path);
    const auto &s = l.scheme;
    const auto lattice = hh::scheme_closed_subsets(s);
    std::vector<hh::ClosedSubset> plain;
    for (const auto &t : lattice)
        plain.push_back(t.relations);
    const auto all = hh::scheme_whole(s);
    std::cout << "closed subsets: " << lattice.size() << "\n";
    for (const auto &t : lattice) {
        std::cout << describe(t) << " index " << hh::scheme_index(t, all);
        if (hh::scheme_is_strongly_normal(s, t, all))
            std::cout << " strongly-normal";
        else if (hh::is_normal(s.hypergroup(), t.relations, all.relations))
            std::cout << " normal";
        if (hh::is_subnormal(s.hypergroup(), t.relations, all.relations, &plain))
            std::cout << " subnormal";
        std::cout << "\n";
    }
    return kOk;
}

int cmd_solvable(const std::string &path)
{
    Loaded l = load(path);
    auto chain = hh::solvable_scheme_chain(l.scheme);
    if (!chain) {
        std::cout << "not solvable\n";
        return kFalse;
    }
    std::cout << "solvable\n";
    for (std::size_t i = 0; i < chain->chain.size(); ++i) {
        std::cout << describe(chain->chain[i]);
        if (i > 0)
            std::cout << " prime index " << chain->indices[i - 1];
        std::cout << "\n";
    }
    return kOk;
}

int cmd_hall(const std::string &path, const std::string &pi_text)
{
    Loaded l = load(path);
    hh::PrimeSet pi = hh::parse_prime_set(pi_text);
    print_certificate(l.scheme, hh::find_hall(l.scheme, pi));
    return kOk;
}

int cmd_conjugate(const std::string &path, const std::string &t_text, const std::string &u_text,
                  const std::string &pi_text)
{
    Loaded l = load(path);
    const auto &s = l.scheme;
    auto t = closed_from_ids(s, t_text);
    auto u = closed_from_ids(s, u_text);
    hh::PrimeSet pi = pi_text.empty() ? hh::PrimeSet(hh::prime_divisors(t.valency)) : hh::parse_prime_set(pi_text);
    std::cout << "pi: " << hh::to_string(pi) << "\n";
    const auto all = hh::scheme_whole(s);
    bool hall = true;
    for (const auto *x : {&t, &u}) {
        auto p = hh::pi_predicates(s, *x, pi);
        if (p.hall_pi_subset)
            continue;
        hall = false;
        std::cout << "not a Hall " << hh::to_string(pi) << "-subset: " << describe(*x) << " index "
                  << hh::scheme_index(*x, all) << " (";
        if (!p.pi_valenced)
            std::cout << "some valency is not a pi-number";
        else if (!p.closed_pi_subset)
            std::cout << "n_T is not a pi-number";
        else
            std::cout << "index is not a pi'-number";
        std::cout << ")\n";
    }
    if (!hall)
        return kFalse;
    auto r = hh::conjugating_element(s, pi, t, u);
    std::cout << "conjugator: " << r.conjugator << "\n";
    std::cout << "all conjugators:";
    for (int c : r.all)
        std::cout << " " << c;
    std::cout << "\n";
    auto back = hh::conjugacy(s, u.relations, t.relations);
    std::cout << "reverse conjugators:";
    for (int c : back.t_to_u)
        std::cout << " " << c;
    std::cout << "\n";
    return kOk;
}

int cmd_extend(const std::string &path, const std::string &pi_text, const std::string &t_text)
{
    Loaded l = load(path);
    hh::PrimeSet pi = hh::parse_prime_set(pi_text);
    auto t = closed_from_ids(l.scheme, t_text);
    auto cert = hh::extend_to_hall(l.scheme, pi, t);
    std::cout << "contains: " << describe(t) << "\n";
    print_certificate(l.scheme, cert);
    return kOk;
}

int cmd_quotient(const std::string &path, const std::string &t_text)
{
    Loaded l = load(path);
    auto t = closed_from_ids(l.scheme, t_text);
    auto q = hh::quotient_scheme(l.scheme, t);
    std::cout << io::render_scheme(
        io::make_scheme_file(l.name + "//" + hh::to_string(t.relations.elements()), q.scheme.matrix()));
    return kOk;
}

int cmd_hypergroup(const std::string &path)
{
    Loaded l = load(path);
    std::cout << hh::render(l.scheme.hypergroup());
    return kOk;
}

int cmd_report(const std::string &dir, const std::vector<std::string> &pi_texts, bool json, bool timings,
               unsigned threads)
{
    std::vector<hh::PrimeSet> pis;
    for (const auto &p : pi_texts)
        pis.push_back(hh::parse_prime_set(p));
    auto inputs = io::collect_inputs(dir);
    auto records = io::report_records(inputs, pis, timings, threads);
    for (const auto &rec : records) {
        if (json) {
            std::cout << rec.dump() << "\n";
            continue;
        }
        std::cout << rec["input"].get<std::string>() << ": ";
        if (!rec["valid"].get<bool>()) {
            std::cout << "invalid (" << rec["error"]["kind"].get<std::string>() << ")\n";
            continue;
        }
        std::cout << "points " << rec["points"] << ", rank " << rec["rank"] << ", closed subsets "
                  << rec["closed_subsets"]["count"] << ", " << (rec["solvable"].get<bool>() ? "solvable" : "not solvable")
                  << "\n";
    }
    return kOk;
}

int cmd_fetch(int order, const std::string &source, bool offline, const std::string &cache, const std::string &out)
{
    io::FetchOptions opt;
    opt.offline = offline;
    if (!cache.empty())
        opt.cache_dir = cache;
    auto result = io::fetch_catalogue(source, order, opt);
    std::cerr << result.schemes.size() << " schemes, sha256 " << result.sha256 << ", cached at "
              << result.cached_file.string() << (result.from_cache ? " (cache hit)" : "") << "\n";
    const std::string text = io::render_catalogue(result.schemes);
    if (out.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(out, std::ios::binary);
        f << text;
    }
    return kOk;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Association schemes, hypergroups and Hall subsets"};
    app.require_subcommand(1);

    std::string file, pi, t, u, dir, source, cache, out;
    std::vector<std::string> pis;
    bool json = false, timings = false, offline = false;
    unsigned threads = std::max(1u, std::thread::hardware_concurrency());
    int order = 0;

    auto *validate = app.add_subcommand("validate", "check the scheme axioms of a scheme or group file");
    validate->add_option("file", file, "scheme (.scm) or group (.grp) file")->required();
    auto *closed = app.add_subcommand("closed", "list the closed subsets");
    closed->add_option("file", file)->required();
    auto *solvable = app.add_subcommand("solvable", "print a solvable chain or \"not solvable\"");
    solvable->add_option("file", file)->required();
    auto *hall = app.add_subcommand("hall", "construct a Hall pi-subset");
    hall->add_option("file", file)->required();
    hall->add_option("--pi", pi, "comma-separated primes")->required();
    auto *conjugate = app.add_subcommand("conjugate", "find s with s*Ts = U for Hall pi-subsets T, U");
    conjugate->add_option("file", file)->required();
    conjugate->add_option("--t", t, "relation ids of T")->required();
    conjugate->add_option("--u", u, "relation ids of U")->required();
    conjugate->add_option("--pi", pi, "comma-separated primes (default: primes dividing n_T)");
    auto *extend = app.add_subcommand("extend", "a Hall pi-subset containing a closed pi-subset T");
    extend->add_option("file", file)->required();
    extend->add_option("--pi", pi, "comma-separated primes")->required();
    extend->add_option("--t", t, "relation ids of T")->required();
    auto *quot = app.add_subcommand("quotient", "emit the quotient scheme S//T");
    quot->add_option("file", file)->required();
    quot->add_option("--t", t, "relation ids of T")->required();
    auto *hyper = app.add_subcommand("hypergroup", "print the complex-multiplication hypergroup");
    hyper->add_option("file", file)->required();
    auto *report = app.add_subcommand("report", "report on every .scm, .grp and .txt file in a directory");
    report->add_option("dir", dir)->required();
    report->add_flag("--json", json, "emit one JSON record per line");
    report->add_option("--pi", pis, "prime set to query; repeatable (default: subsets of primes dividing n)");
    report->add_flag("--timings", timings, "include timings in the records");
    report->add_option("--threads", threads, "worker threads");
    auto *fetch = app.add_subcommand("fetch", "fetch and cache a catalogue file of the given order");
    fetch->add_option("order", order)->required();
    fetch->add_option("--source", source, "base URL or local mirror directory")->required();
    fetch->add_flag("--offline", offline, "use only the cache");
    fetch->add_option("--cache", cache, "cache directory (default: $HYPERHALL_CACHE)");
    fetch->add_option("--out", out, "write the canonical catalogue here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kInput;
    }

    try {
        if (*validate)
            return cmd_validate(file);
        if (*closed)
            return cmd_closed(file);
        if (*solvable)
            return cmd_solvable(file);
        if (*hall)
            return cmd_hall(file, pi);
        if (*conjugate)
            return cmd_conjugate(file, t, u, pi);
        if (*extend)
            return cmd_extend(file, pi, t);
        if (*quot)
            return cmd_quotient(file, t);
        if (*hyper)
            return cmd_hypergroup(file);
        if (*report)
            return cmd_report(dir, pis, json, timings, threads);
        if (*fetch)
            return cmd_fetch(order, source, offline, cache, out);
    } catch (const hh::Error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.kind() == hh::ErrorKind::InternalInconsistency ? kInternal : kInput;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInput;
    }
    return kInput;
}
