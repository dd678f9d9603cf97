#ifndef HYPERHALL_IO_REPORT_HPP
#define HYPERHALL_IO_REPORT_HPP

// Needs nlohmann/json (json.hpp) on the include path.

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <thread>
#include <variant>
#include <vector>

#include "../hall.hpp"
#include "../scheme.hpp"
#include "text_format.hpp"

namespace hyperhall::io
{

using Json = nlohmann::ordered_json;

inline constexpr int kReportSchemaVersion = 1;

/// One unit of work for the report: a scheme file, a group file, or one
/// scheme taken from a catalogue file.
struct ReportInput
{
    std::string id;
    std::variant<SchemeFile, GroupFile> content;
};

/// Nonempty sets of prime divisors of n, ordered by size then lexicographically.
inline std::vector<PrimeSet> default_pi_sets(int n)
{
    std::vector<int> primes = prime_divisors(n);
    std::vector<std::vector<int>> sets;
    for (std::uint32_t mask = 1; mask < (1u << primes.size()); ++mask) {
        std::vector<int> s;
        for (std::size_t i = 0; i < primes.size(); ++i)
            if (mask & (1u << i))
                s.push_back(primes[i]);
        sets.push_back(s);
    }
    std::sort(sets.begin(), sets.end(), [](const auto &a, const auto &b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    std::vector<PrimeSet> out;
    for (auto &s : sets)
        out.emplace_back(std::move(s));
    return out;
}

inline Json subset_json(const AssociationScheme &s, const ElementSubset &t)
{
    return Json{{"relations", t.members()}, {"valency", s.valency(t)}};
}

namespace detail
{

class Stopwatch
{
public:
    double lap_ms()
    {
        auto now = std::chrono::steady_clock::now();
        double ms = std::chrono::duration<double, std::milli>(now - last_).count();
        last_ = now;
        return ms;
    }

private:
    std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
};

inline Json error_json(const Error &e)
{
    return Json{{"kind", std::string(to_string(e.kind()))}, {"message", e.what()}, {"witness", e.witness()}};
}

inline Json pi_json(const AssociationScheme &s, const PrimeSet &pi, bool solvable)
{
    Json out{{"pi", pi.primes()}, {"pi_valenced", is_pi_valenced(s, pi)}};
    auto exhaustive = hall_subsets_exhaustive(s, pi);
    out["hall_subsets"] = exhaustive.size();
    if (!solvable) {
        out["status"] = "NotSolvable";
        return out;
    }
    if (!out["pi_valenced"].get<bool>()) {
        out["status"] = "NotPiValenced";
        return out;
    }
    HallCertificate cert = find_hall(s, pi);
    out["status"] = "ok";
    out["o_pi"] = subset_json(s, cert.o_pi.relations);
    out["hall"] = subset_json(s, cert.hall.relations);
    out["hall"]["index"] = cert.index;
    out["thin_quotient_order"] = cert.thin_quotient_group.order();
    return out;
}

} // namespace detail

/// ReportRecord for one input (schema version 1, see docs/report-schema.md).
/// `pis` empty means default_pi_sets(n_points). Timings are included only on
/// request so that records are otherwise byte-stable.
inline Json report_record(const ReportInput &input, const std::vector<PrimeSet> &pis, bool timings)
{
    Json rec{{"schema_version", kReportSchemaVersion}, {"input", input.id}};
    detail::Stopwatch clock;
    Json times = Json::object();
    try {
        AssociationScheme s = std::holds_alternative<SchemeFile>(input.content)
                                  ? validate_scheme(std::get<SchemeFile>(input.content).matrix)
                                  : from_group(std::get<GroupFile>(input.content).table);
        times["validate"] = clock.lap_ms();
        rec["kind"] = std::holds_alternative<SchemeFile>(input.content) ? "scheme" : "group";
        rec["valid"] = true;
        rec["points"] = s.n_points();
        rec["rank"] = s.rank();
        rec["valencies"] = s.valencies();
        rec["thin"] = is_thin(s.hypergroup());

        auto lattice = scheme_closed_subsets(s);
        std::vector<std::int64_t> census;
        for (const auto &t : lattice)
            census.push_back(t.valency);
        std::sort(census.begin(), census.end());
        rec["closed_subsets"] = Json{{"count", lattice.size()}, {"valencies", census}};
        times["closed"] = clock.lap_ms();

        auto chain = solvable_scheme_chain(s);
        rec["solvable"] = chain.has_value();
        if (chain) {
            Json steps = Json::array();
            for (const auto &t : chain->chain)
                steps.push_back(subset_json(s, t.relations));
            rec["solvable_chain"] = steps;
        } else {
            rec["solvable_chain"] = nullptr;
        }
        times["solvable"] = clock.lap_ms();

        Json pi_records = Json::array();
        for (const auto &pi : pis.empty() ? default_pi_sets(s.n_points()) : pis)
            pi_records.push_back(detail::pi_json(s, pi, chain.has_value()));
        rec["pi"] = pi_records;
        times["hall"] = clock.lap_ms();
    } catch (const Error &e) {
        if (e.kind() == ErrorKind::InternalInconsistency)
            throw;
        rec["valid"] = false;
        rec["error"] = detail::error_json(e);
    }
    if (timings)
        rec["timings_ms"] = times;
    return rec;
}

/// Inputs under `dir` in name order: *.scm scheme files, *.grp group files and
/// *.txt catalogue files (one input per contained scheme, id "file#name" or
/// "file#k").
inline std::vector<ReportInput> collect_inputs(const std::filesystem::path &dir)
{
    std::vector<std::filesystem::path> files;
    for (const auto &entry : std::filesystem::directory_iterator(dir))
        if (entry.is_regular_file())
            files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    std::vector<ReportInput> out;
    for (const auto &f : files) {
        const std::string ext = f.extension().string();
        if (ext != ".scm" && ext != ".grp" && ext != ".txt")
            continue;
        std::ifstream in(f, std::ios::binary);
        std::ostringstream os;
        os << in.rdbuf();
        const std::string text = os.str();
        const std::string base = f.filename().string();
        if (ext == ".scm") {
            out.push_back({base, parse_scheme(text)});
        } else if (ext == ".grp") {
            out.push_back({base, parse_group(text)});
        } else {
            auto schemes = parse_catalogue(text);
            for (std::size_t k = 0; k < schemes.size(); ++k) {
                std::string id = base + "#" + (schemes[k].name.empty() ? std::to_string(k + 1) : schemes[k].name);
                out.push_back({id, std::move(schemes[k])});
            }
        }
    }
    return out;
}

/// Records for all inputs, computed on `threads` workers, returned in input
/// order.
inline std::vector<Json> report_records(const std::vector<ReportInput> &inputs, const std::vector<PrimeSet> &pis,
                                        bool timings, unsigned threads = std::thread::hardware_concurrency())
{
    std::vector<Json> out(inputs.size());
    std::vector<std::exception_ptr> failures(inputs.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i; (i = next++) < inputs.size();) {
            try {
                out[i] = report_record(inputs[i], pis, timings);
            } catch (...) {
                failures[i] = std::current_exception();
            }
        }
    };
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(inputs.size())));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t)
        pool.emplace_back(work);
    work();
    for (auto &t : pool)
        t.join();
    for (auto &f : failures)
        if (f)
            std::rethrow_exception(f);
    return out;
}

} // namespace hyperhall::io

#endif // HYPERHALL_IO_REPORT_HPP
