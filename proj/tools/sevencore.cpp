// Command-line front end: coefficient queries, representation counts,
// identity checks and inequality scans.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <unistd.h>

#include <CLI11.hpp>

#include <sevencore/cache.hpp>
#include <sevencore/query.hpp>
#include <sevencore/records.hpp>
#include <sevencore/sevencore.hpp>

namespace sc = sevencore;

namespace
{

enum exit_code : int
{
    EXIT_OK = 0,
    EXIT_FAILED = 1,
    EXIT_USAGE = 2,
};

struct usage_error : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

struct options
{
    std::string name;
    std::string position;
    std::optional<std::uint64_t> order;
    std::optional<std::uint64_t> max;
    std::optional<unsigned> t;
    std::string route;
    std::string format = "text";
    std::string cache;
    bool force = false;
    unsigned threads = std::max(1U, std::thread::hardware_concurrency());
};

class emitter
{
public:
    explicit emitter(std::string format) : format_(std::move(format))
    {
        const bool tty = isatty(STDOUT_FILENO) != 0;
        color_ = tty && std::getenv("NO_COLOR") == nullptr;
    }

    void emit(const sc::output_record& rec)
    {
        if (format_ == "json") {
            std::cout << sc::to_json(rec).dump() << '\n';
        } else if (format_ == "csv") {
            if (!header_done_) {
                std::cout << sc::csv_header() << '\n';
                header_done_ = true;
            }
            std::cout << sc::to_csv_row(rec) << '\n';
        } else {
            text(rec);
        }
    }

private:
    std::string status(const std::string& s) const
    {
        if (!color_) {
            return s;
        }
        return (s == "VERIFIED" ? "\033[32m" : "\033[31m") + s + "\033[0m";
    }

    static std::string list(const std::vector<std::uint64_t>& v)
    {
        std::string s = "[";
        for (std::size_t i = 0; i < v.size(); ++i) {
            s += (i ? ", " : "") + std::to_string(v[i]);
        }
        return s + "]";
    }

    void text(const sc::output_record& rec) const
    {
        if (const auto* v = std::get_if<sc::integer>(&rec.result)) {
            const auto& in = rec.inputs;
            const std::string subject = rec.command == "count" ? in["form"].get<std::string>()
                                                               : in["series"].get<std::string>();
            std::cout << subject << "(" << in["n"].dump() << ") = " << *v << "  [" << in["route"].get<std::string>()
                      << "]\n";
        } else if (const auto* r = std::get_if<sc::scan_report>(&rec.result)) {
            std::cout << r->name << " up to " << r->range << ": " << status(sc::to_string(r->status))
                      << "  exceptions " << list(r->exceptions_found) << " (expected "
                      << list(r->expected_exceptions) << ")";
            if (r->route_samples > 0) {
                std::cout << "  routes " << (r->routes_agree ? "agree" : "DISAGREE") << " on " << r->route_samples
                          << " samples";
            }
            std::cout << '\n';
            if (r->first_failure) {
                std::cout << "  first failure at n = " << r->first_failure->n << ": lhs " << r->first_failure->lhs
                          << ", rhs " << r->first_failure->rhs << '\n';
            }
            for (const auto& note : r->notes) {
                std::cout << "  note: " << note << '\n';
            }
        } else {
            const auto& c = std::get<sc::cache_record>(rec.result);
            std::cout << c.check << " up to " << c.range << ": " << status(c.status) << "  exceptions "
                      << list(c.exceptions) << "  (cached " << c.timestamp << ", skipped; use --force to rerun)\n";
        }
    }

    std::string format_;
    bool color_ = false;
    bool header_done_ = false;
};

double ms_since(std::chrono::steady_clock::time_point start)
{
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

std::uint64_t parse_index(const std::string& s)
{
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
        throw usage_error("not a non-negative integer: '" + s + "'");
    }
    try {
        return std::stoull(s);
    } catch (const std::out_of_range&) {
        throw usage_error("index too large: '" + s + "'");
    }
}

// "n" or "a..b"
std::pair<std::uint64_t, std::uint64_t> parse_range(const std::string& s)
{
    const auto dots = s.find("..");
    if (dots == std::string::npos) {
        const auto n = parse_index(s);
        return {n, n};
    }
    const auto a = parse_index(s.substr(0, dots));
    const auto b = parse_index(s.substr(dots + 2));
    if (a > b) {
        throw usage_error("empty range '" + s + "'");
    }
    return {a, b};
}

int cmd_coeff(const options& o, emitter& out)
{
    const auto series = sc::parse_coeff_series(o.name);
    if (!series) {
        throw usage_error("unknown series '" + o.name + "' (expected L, K, M, phi3phi7_3, psi3psi7_3 or a_t)");
    }
    const auto [first, last] = parse_range(o.position);
    sc::route r = sc::permitted_routes(*series).front();
    if (!o.route.empty()) {
        const auto parsed = sc::parse_route(o.route);
        if (!parsed) {
            throw usage_error("unknown route '" + o.route + "'");
        }
        if (!sc::is_permitted(*series, *parsed)) {
            throw usage_error("route '" + o.route + "' is not available for " + o.name);
        }
        r = *parsed;
    }
    const unsigned t = o.t.value_or(7);
    if (*series == sc::coeff_series::A_T && t < 2) {
        throw usage_error("a_t needs --t >= 2");
    }
    const auto start = std::chrono::steady_clock::now();
    const auto values = sc::coefficients(*series, first, last, t, r);
    const double per = ms_since(start) / double(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        sc::output_record rec;
        rec.command = "coeff";
        rec.inputs = {{"series", o.name}, {"n", first + i}, {"route", sc::to_string(r)}};
        if (*series == sc::coeff_series::A_T) {
            rec.inputs["t"] = t;
        }
        rec.result = values[i];
        rec.elapsed_ms = per;
        out.emit(rec);
    }
    return EXIT_OK;
}

int cmd_count(const options& o, emitter& out)
{
    const auto n = parse_index(o.position);
    const auto start = std::chrono::steady_clock::now();
    sc::rep_count c;
    if (o.name == "sextenary") {
        c = sc::count_sextenary(n);
    } else if (o.name == "odd-sextenary") {
        c = sc::count_odd_sextenary(n);
    } else {
        throw usage_error("unknown form '" + o.name + "' (expected sextenary or odd-sextenary)");
    }
    sc::output_record rec;
    rec.command = "count";
    rec.inputs = {{"form", o.name}, {"n", n}, {"route", sc::to_string(c.method)}};
    rec.result = c.count;
    rec.elapsed_ms = ms_since(start);
    out.emit(rec);
    return EXIT_OK;
}

std::string report_name(const sc::check_entry& e, unsigned t)
{
    if (e.name == "conjecture") {
        return "conjecture-t" + std::to_string(t);
    }
    if (e.name == "core-positivity") {
        return "core-positivity-t" + std::to_string(t);
    }
    return e.name;
}

struct check_request
{
    const sc::check_entry* entry;
    std::uint64_t range;
    unsigned t;
};

// Runs the checks in order, consulting the cache when one is given.
// Returns true iff every check is VERIFIED.
bool run_checks(const std::string& command, const std::vector<check_request>& requests, const options& o,
                emitter& out)
{
    std::optional<sc::scan_cache> cache;
    if (!o.cache.empty()) {
        cache.emplace(o.cache);
    }
    const sc::scan_options opt{o.threads};
    bool all = true;
    for (const auto& req : requests) {
        sc::output_record rec;
        rec.command = command;
        rec.inputs = {{"check", req.entry->name}, {"range", req.range}};
        if (req.entry->uses_t) {
            rec.inputs["t"] = req.t;
        }
        const auto name = report_name(*req.entry, req.t);
        if (cache && !o.force) {
            if (auto hit = cache->find_verified(name, req.range)) {
                rec.result = *hit;
                out.emit(rec);
                continue;
            }
        }
        const auto start = std::chrono::steady_clock::now();
        auto report = sc::run_check(req.entry->name, req.range, req.t, opt);
        rec.elapsed_ms = ms_since(start);
        all = all && report.verified();
        if (cache) {
            cache->append(sc::make_cache_record(report));
        }
        rec.result = std::move(report);
        out.emit(rec);
    }
    return all;
}

std::uint64_t range_for(const sc::check_entry& e, const options& o)
{
    const bool order_kind = e.kind == sc::range_kind::ORDER;
    if (order_kind && o.max) {
        throw usage_error(e.name + " is an identity check; give its order with --order");
    }
    if (!order_kind && o.order) {
        throw usage_error(e.name + " is a range scan; give its bound with --max");
    }
    return order_kind ? o.order.value_or(e.default_range) : o.max.value_or(e.default_range);
}

int cmd_verify(const options& o, emitter& out)
{
    const auto* e = sc::find_check(o.name);
    if (!e) {
        std::string names;
        for (const auto& c : sc::check_catalog()) {
            names += (names.empty() ? "" : ", ") + c.name;
        }
        throw usage_error("unknown check '" + o.name + "' (expected one of: " + names + ")");
    }
    if (o.t && !e->uses_t) {
        throw usage_error(e->name + " does not take --t");
    }
    const unsigned t = o.t.value_or(e->default_t);
    return run_checks("verify", {{e, range_for(*e, o), t}}, o, out) ? EXIT_OK : EXIT_FAILED;
}

int cmd_scan(const options& o, emitter& out)
{
    if (o.order) {
        throw usage_error("scan takes --max, not --order");
    }
    const std::uint64_t max = o.max.value_or(5000);
    std::vector<check_request> reqs;
    for (const char* name : {"theorem1", "theorem2", "abstract", "concluding", "xc", "nib"}) {
        reqs.push_back({sc::find_check(name), max, 0});
    }
    const std::vector<unsigned> conj_ts = o.t ? std::vector<unsigned>{*o.t} : std::vector<unsigned>{11, 13, 15};
    for (auto t : conj_ts) {
        reqs.push_back({sc::find_check("conjecture"), max, t});
    }
    reqs.push_back({sc::find_check("core-positivity"), max, o.t.value_or(7)});
    return run_checks("scan", reqs, o, out) ? EXIT_OK : EXIT_FAILED;
}

int cmd_selftest(const options& o, emitter& out)
{
    const std::vector<std::pair<const char*, std::uint64_t>> suite{
        {"ntp1", 200},       {"ntp2", 200},      {"btyi", 200},       {"epl", 200},
        {"dissection", 200}, {"lambert-L", 1000}, {"lambert-K", 1000}, {"coef-M", 1000},
        {"closed-phi", 100}, {"closed-psi", 100}, {"core-oracle", 25},
    };
    std::vector<check_request> reqs;
    for (const auto& [name, range] : suite) {
        reqs.push_back({sc::find_check(name), range, 0});
    }
    options no_cache = o;
    no_cache.cache.clear();
    return run_checks("selftest", reqs, no_cache, out) ? EXIT_OK : EXIT_FAILED;
}

void add_common(CLI::App* sub, options& o)
{
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_option("--threads", o.threads, "Worker threads for scans")->check(CLI::Range(1U, 256U));
}

void add_scan_flags(CLI::App* sub, options& o)
{
    sub->add_option("--cache", o.cache, "Line-delimited results cache");
    sub->add_flag("--force", o.force, "Rerun checks the cache already holds as VERIFIED");
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact q-series, sextenary form counts and 7-core inequality scans"};
    app.set_version_flag("--version", sc::version_string);
    app.require_subcommand(1);
    options o;

    auto* coeff = app.add_subcommand("coeff", "Coefficients of L, K, M, phi3phi7_3, psi3psi7_3 or a_t");
    coeff->add_option("series", o.name, "Series name")->required();
    coeff->add_option("n", o.position, "Index n or range a..b")->required();
    coeff->add_option("--t", o.t, "t for a_t (default 7)");
    coeff->add_option("--route", o.route, "Force a route")->check(CLI::IsMember({"closed", "series", "oracle"}));
    add_common(coeff, o);

    auto* count = app.add_subcommand("count", "Representation counts by lattice enumeration");
    count->add_option("form", o.name, "sextenary or odd-sextenary")->required();
    count->add_option("n", o.position, "n (for odd-sextenary, the target is 8n)")->required();
    add_common(count, o);

    auto* verify = app.add_subcommand("verify", "Run one identity check or inequality scan");
    verify->add_option("check", o.name, "Check name")->required();
    verify->add_option("--order", o.order, "Truncation order for identity checks");
    verify->add_option("--max", o.max, "Upper bound for range scans");
    verify->add_option("--t", o.t, "t for conjecture and core-positivity");
    add_common(verify, o);
    add_scan_flags(verify, o);

    auto* scan = app.add_subcommand("scan", "Run every inequality scan");
    scan->add_option("--max", o.max, "Upper bound (default 5000)");
    scan->add_option("--order", o.order, "Not accepted; present for a clear message");
    scan->add_option("--t", o.t, "Restrict conjecture and core-positivity to this t");
    add_common(scan, o);
    add_scan_flags(scan, o);

    auto* selftest = app.add_subcommand("selftest", "Consistency checks at small orders");
    add_common(selftest, o);

    auto* checks = app.add_subcommand("checks", "List check names");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? EXIT_OK : EXIT_USAGE;
    }

    emitter out(o.format);
    try {
        if (*coeff) {
            return cmd_coeff(o, out);
        }
        if (*count) {
            return cmd_count(o, out);
        }
        if (*verify) {
            return cmd_verify(o, out);
        }
        if (*scan) {
            return cmd_scan(o, out);
        }
        if (*selftest) {
            return cmd_selftest(o, out);
        }
        if (*checks) {
            for (const auto& e : sc::check_catalog()) {
                std::cout << e.name << (e.kind == sc::range_kind::ORDER ? "  --order " : "  --max ")
                          << e.default_range << "  " << e.summary << '\n';
            }
            return EXIT_OK;
        }
    } catch (const usage_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return EXIT_USAGE;
    } catch (const sc::error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return EXIT_USAGE;
    }
    return EXIT_USAGE;
}
