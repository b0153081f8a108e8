// dihedral: command-line front end over the libdihedral C interface.
//
// Exit codes: 0 success, 1 verification mismatch, 2 invalid arguments,
// 3 resource cap (rank-oracle basis cap, int64 overflow).

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <unistd.h>

#include "CLI11.hpp"
#include "json.hpp"

#include "dihedral/dihedral.h"

namespace {

using json = nlohmann::ordered_json;

constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCap = 3;
constexpr std::int64_t kAutoRankLimit = 120;

struct Failure {
    int code;
    std::string message;
};

int exit_code_for(dr_status s) {
    switch (s) {
    case DR_OK: return 0;
    case DR_ERR_INVALID_ARGUMENT: return kExitUsage;
    case DR_ERR_CAP_EXCEEDED:
    case DR_ERR_OVERFLOW: return kExitCap;
    default: return kExitMismatch;
    }
}

void check(dr_status s) {
    if (s != DR_OK) throw Failure{exit_code_for(s), dr_last_error()};
}

struct Options {
    std::string n;
    std::string d;
    std::optional<std::int64_t> dmax;
    std::string chars = "all";
    std::int64_t order = 10;
    std::string method = "closed-form";
    bool with_rank = false;
    std::optional<std::size_t> cap;
    std::string format = "plain";
    unsigned jobs = 1;
    bool paper_form = false;
};

bool use_color() {
    const char* no_color = std::getenv("NO_COLOR");
    return (no_color == nullptr || *no_color == '\0') && isatty(STDOUT_FILENO);
}

std::string paint(const std::string& text, const char* code) {
    return use_color() ? std::string("\x1b[") + code + "m" + text + "\x1b[0m" : text;
}

std::int64_t parse_int(const std::string& text, const std::string& flag) {
    std::size_t used = 0;
    std::int64_t value = 0;
    try {
        value = std::stoll(text, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != text.size()) throw Failure{kExitUsage, flag + ": not an integer: '" + text + "'"};
    return value;
}

// "a..b", "a" or "a,b,c" (items may themselves be ranges); sorted, unique.
std::vector<std::int64_t> parse_range(const std::string& text, const std::string& flag) {
    std::set<std::int64_t> out;
    std::stringstream items(text);
    std::string item;
    while (std::getline(items, item, ',')) {
        const auto dots = item.find("..");
        if (dots == std::string::npos) {
            out.insert(parse_int(item, flag));
            continue;
        }
        const std::int64_t lo = parse_int(item.substr(0, dots), flag);
        const std::int64_t hi = parse_int(item.substr(dots + 2), flag);
        if (lo > hi) throw Failure{kExitUsage, flag + ": empty range '" + item + "'"};
        if (hi - lo > 100000) throw Failure{kExitUsage, flag + ": range too long '" + item + "'"};
        for (std::int64_t v = lo; v <= hi; ++v) out.insert(v);
    }
    if (out.empty()) throw Failure{kExitUsage, flag + ": empty range"};
    return {out.begin(), out.end()};
}

std::int64_t single(const std::vector<std::int64_t>& values, const std::string& flag) {
    if (values.size() != 1) throw Failure{kExitUsage, flag + ": expected a single value"};
    return values.front();
}

std::string char_name(dr_char chi) {
    char buf[64];
    check(dr_char_name(chi, buf, sizeof buf, nullptr));
    return buf;
}

std::vector<dr_char> irreducibles(std::int64_t n) {
    std::size_t count = 0;
    check(dr_irreducible_characters(n, nullptr, 0, &count));
    std::vector<dr_char> out(count);
    check(dr_irreducible_characters(n, out.data(), out.size(), &count));
    return out;
}

// chi1..chi4, psi:<h>, psi (every psi_h) or all; comma separated. Result in
// canonical order.
std::vector<dr_char> select_chars(std::int64_t n, const std::string& selector) {
    const std::vector<dr_char> all = irreducibles(n);
    std::set<std::size_t> picked;
    std::stringstream items(selector);
    std::string item;
    while (std::getline(items, item, ',')) {
        if (item == "all") {
            for (std::size_t i = 0; i < all.size(); ++i) picked.insert(i);
            continue;
        }
        if (item == "psi") {
            for (std::size_t i = 0; i < all.size(); ++i) {
                if (all[i].kind == DR_CHAR_TWO_DIM) picked.insert(i);
            }
            continue;
        }
        dr_char chi{};
        check(dr_char_parse(n, item.c_str(), &chi));
        for (std::size_t i = 0; i < all.size(); ++i) {
            if (all[i].kind == chi.kind && all[i].index == chi.index) picked.insert(i);
        }
    }
    if (picked.empty()) throw Failure{kExitUsage, "--char: no characters selected"};
    std::vector<dr_char> out;
    for (std::size_t i : picked) out.push_back(all[i]);
    return out;
}

dr_method parse_method(const std::string& text) {
    if (text == "closed-form" || text == "closed_form") return DR_METHOD_CLOSED_FORM;
    if (text == "char-sum" || text == "char_sum") return DR_METHOD_CHAR_SUM;
    if (text == "rank") return DR_METHOD_RANK;
    throw Failure{kExitUsage, "--method: expected closed-form, char-sum or rank"};
}

const char* method_label(dr_method m) {
    switch (m) {
    case DR_METHOD_CHAR_SUM: return "char_sum";
    case DR_METHOD_RANK: return "rank";
    default: return "closed_form";
    }
}

std::vector<std::int64_t> degrees(const Options& o, const char* fallback) {
    if (!o.d.empty() && o.dmax) throw Failure{kExitUsage, "--d and --dmax are mutually exclusive"};
    if (o.dmax) {
        if (*o.dmax < 0) throw Failure{kExitUsage, "--dmax must be non-negative"};
        return parse_range("0.." + std::to_string(*o.dmax), "--dmax");
    }
    return parse_range(o.d.empty() ? fallback : o.d, "--d");
}

void emit_json(const json& j) { std::cout << j.dump(2) << '\n'; }

// Runs work(i) for i in [0, count) on up to `jobs` threads. Results are
// written by index, so callers see the same output for any job count.
template <class Work>
void run_grid(std::size_t count, unsigned jobs, Work work) {
    jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
    if (jobs == 1) {
        for (std::size_t i = 0; i < count; ++i) work(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t) {
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < count; i = next++) work(i);
        });
    }
    for (auto& th : pool) th.join();
}

struct Cell {
    std::int64_t n;
    std::int64_t d;
    dr_char chi;
};

std::vector<Cell> grid(const std::vector<std::int64_t>& ns, const std::vector<std::int64_t>& ds,
                       const std::string& selector) {
    std::vector<Cell> cells;
    for (std::int64_t n : ns) {
        const auto chars = select_chars(n, selector);
        for (std::int64_t d : ds) {
            if (d < 0) throw Failure{kExitUsage, "--d: degrees must be non-negative"};
            for (dr_char chi : chars) cells.push_back({n, d, chi});
        }
    }
    return cells;
}

// ---------------------------------------------------------------- dim

int cmd_dim(const Options& o) {
    if (o.n.empty()) throw Failure{kExitUsage, "dim: --n is required"};
    if (o.d.empty() && !o.dmax) throw Failure{kExitUsage, "dim: --d is required"};
    const dr_method method = parse_method(o.method);
    const auto cells = grid(parse_range(o.n, "--n"), degrees(o, ""), o.chars);
    std::vector<std::int64_t> values(cells.size());
    std::vector<dr_status> status(cells.size(), DR_OK);
    std::vector<std::string> errors(cells.size());
    run_grid(cells.size(), o.jobs, [&](std::size_t i) {
        const Cell& c = cells[i];
        status[i] = dr_dim(c.n, c.d, c.chi, method, o.cap.value_or(0), &values[i]);
        if (status[i] != DR_OK) errors[i] = dr_last_error();
    });
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (status[i] != DR_OK) throw Failure{exit_code_for(status[i]), errors[i]};
    }

    if (o.format == "json") {
        json out = json::array();
        for (std::size_t i = 0; i < cells.size(); ++i) {
            out.push_back({{"n", cells[i].n},
                           {"d", cells[i].d},
                           {"char", char_name(cells[i].chi)},
                           {"dim", values[i]},
                           {"method", method_label(method)}});
        }
        emit_json(out);
    } else if (o.format == "csv") {
        std::cout << "n,d,char,dim,method\n";
        for (std::size_t i = 0; i < cells.size(); ++i) {
            std::cout << cells[i].n << ',' << cells[i].d << ',' << char_name(cells[i].chi) << ','
                      << values[i] << ',' << method_label(method) << '\n';
        }
    } else if (cells.size() == 1) {
        std::cout << values.front() << '\n';
    } else {
        std::printf("%4s %4s %-8s %s\n", "n", "d", "char", "dim");
        for (std::size_t i = 0; i < cells.size(); ++i) {
            std::printf("%4lld %4lld %-8s %lld\n", static_cast<long long>(cells[i].n),
                        static_cast<long long>(cells[i].d), char_name(cells[i].chi).c_str(),
                        static_cast<long long>(values[i]));
        }
    }
    return 0;
}

// ---------------------------------------------------------------- table

int cmd_table(const Options& o) {
    if (o.n.empty()) throw Failure{kExitUsage, "table: --n is required"};
    const std::int64_t n = single(parse_range(o.n, "--n"), "--n");
    const dr_method method = parse_method(o.method);
    const auto ds = degrees(o, "0..10");
    const auto chars = irreducibles(n);
    const auto cells = grid({n}, ds, "all");

    std::vector<std::int64_t> values(cells.size());
    std::vector<dr_status> status(cells.size(), DR_OK);
    std::vector<std::string> errors(cells.size());
    run_grid(cells.size(), o.jobs, [&](std::size_t i) {
        status[i] = dr_dim(n, cells[i].d, cells[i].chi, method, o.cap.value_or(0), &values[i]);
        if (status[i] != DR_OK) errors[i] = dr_last_error();
    });
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (status[i] != DR_OK) throw Failure{exit_code_for(status[i]), errors[i]};
    }

    std::vector<std::string> names;
    for (dr_char chi : chars) names.push_back(char_name(chi));
    struct Row {
        std::int64_t d;
        std::vector<std::int64_t> dims;
        std::int64_t total = 0;
        std::int64_t monomials = 0;
    };
    std::vector<Row> rows;
    bool complete = true;
    for (std::size_t r = 0; r < ds.size(); ++r) {
        Row row{ds[r], {}, 0, 0};
        for (std::size_t c = 0; c < chars.size(); ++c) {
            const std::int64_t v = values[r * chars.size() + c];
            row.dims.push_back(v);
            row.total += v;
        }
        check(dr_monomial_count(n, ds[r], &row.monomials));
        complete = complete && row.total == row.monomials;
        rows.push_back(std::move(row));
    }

    if (o.format == "json") {
        json out = json::array();
        for (const Row& row : rows) {
            json dims = json::object();
            for (std::size_t c = 0; c < names.size(); ++c) dims[names[c]] = row.dims[c];
            out.push_back({{"n", n},
                           {"d", row.d},
                           {"method", method_label(method)},
                           {"dims", dims},
                           {"total", row.total},
                           {"monomials", row.monomials}});
        }
        emit_json(out);
    } else if (o.format == "csv") {
        std::cout << "n,d";
        for (const auto& name : names) std::cout << ',' << name;
        std::cout << ",total,monomials\n";
        for (const Row& row : rows) {
            std::cout << n << ',' << row.d;
            for (std::int64_t v : row.dims) std::cout << ',' << v;
            std::cout << ',' << row.total << ',' << row.monomials << '\n';
        }
    } else {
        std::printf("D_%lld, %s\n", static_cast<long long>(n), method_label(method));
        std::printf("%4s", "d");
        for (const auto& name : names) std::printf(" %8s", name.c_str());
        std::printf(" %10s %12s\n", "total", "C(n+d-1,d)");
        for (const Row& row : rows) {
            std::printf("%4lld", static_cast<long long>(row.d));
            for (std::int64_t v : row.dims) std::printf(" %8lld", static_cast<long long>(v));
            std::printf(" %10lld %12lld%s\n", static_cast<long long>(row.total),
                        static_cast<long long>(row.monomials), row.total == row.monomials ? "" : "  !");
        }
    }
    if (!complete) {
        std::cerr << "table: row sums differ from the monomial count\n";
        return kExitMismatch;
    }
    return 0;
}

// ---------------------------------------------------------------- series

std::string report_coeff(const dr_report* report, std::size_t i, int which, std::int64_t d) {
    char buf[256];
    std::size_t needed = 0;
    if (dr_report_coeff(report, i, which, d, buf, sizeof buf, &needed) == DR_OK) return buf;
    std::string big(needed, '\0');
    check(dr_report_coeff(report, i, which, d, big.data(), big.size(), &needed));
    big.resize(needed - 1);
    return big;
}

std::string list(const std::vector<std::string>& items) {
    std::string out = "[";
    for (std::size_t i = 0; i < items.size(); ++i) out += (i ? ", " : "") + items[i];
    return out + "]";
}

int cmd_paper_form(const Options& o, std::int64_t n) {
    dr_report* raw = nullptr;
    check(dr_report_create(n, o.order, &raw));
    std::unique_ptr<dr_report, void (*)(dr_report*)> report(raw, dr_report_free);

    std::optional<std::string> wanted;
    if (o.chars != "all") {
        dr_char chi{};
        check(dr_char_parse(n, o.chars.c_str(), &chi));
        wanted = char_name(chi);
    }

    struct Entry {
        dr_report_entry info;
        std::vector<std::string> printed, expected;
    };
    std::vector<Entry> entries;
    for (std::size_t i = 0; i < dr_report_size(report.get()); ++i) {
        Entry e{};
        check(dr_report_get(report.get(), i, &e.info));
        const std::string label = e.info.label;
        if (wanted && label != *wanted && label != "D10 " + *wanted) continue;
        for (std::int64_t d = 0; d <= o.order; ++d) {
            e.printed.push_back(report_coeff(report.get(), i, 0, d));
            e.expected.push_back(report_coeff(report.get(), i, 1, d));
        }
        entries.push_back(std::move(e));
    }

    if (o.format == "json") {
        json out = json::array();
        for (const Entry& e : entries) {
            json record = {{"n", n},
                           {"label", e.info.label},
                           {"expression", e.info.expression},
                           {"order", o.order},
                           {"first_divergence", nullptr},
                           {"divergences", e.info.divergence_count},
                           {"printed_is_integral", e.info.printed_is_integral != 0},
                           {"printed", e.printed},
                           {"expected", e.expected}};
            if (e.info.first_divergence >= 0) record["first_divergence"] = e.info.first_divergence;
            out.push_back(std::move(record));
        }
        emit_json(out);
    } else if (o.format == "csv") {
        std::cout << "label,d,printed,expected\n";
        for (const Entry& e : entries) {
            for (std::size_t d = 0; d < e.printed.size(); ++d) {
                std::cout << e.info.label << ',' << d << ',' << e.printed[d] << ',' << e.expected[d] << '\n';
            }
        }
    } else {
        if (entries.empty()) std::cout << "no printed form for this character\n";
        for (const Entry& e : entries) {
            std::cout << e.info.label << ": " << e.info.expression << '\n';
            if (e.info.first_divergence < 0) {
                std::cout << "  " << paint("agrees", "32") << " through d = " << o.order << '\n';
            } else {
                const auto d = static_cast<std::size_t>(e.info.first_divergence);
                std::cout << "  " << paint("first divergence", "31") << " at d = " << d << ": printed "
                          << e.printed[d] << ", expected " << e.expected[d] << " ("
                          << e.info.divergence_count << " divergent degree"
                          << (e.info.divergence_count == 1 ? "" : "s") << ")\n";
            }
            std::cout << "  printed:  " << list(e.printed) << '\n';
            std::cout << "  expected: " << list(e.expected) << '\n';
        }
    }
    return 0;
}

int cmd_series(const Options& o) {
    if (o.n.empty()) throw Failure{kExitUsage, "series: --n is required"};
    const std::int64_t n = single(parse_range(o.n, "--n"), "--n");
    if (o.order < 0) throw Failure{kExitUsage, "--order must be non-negative"};
    if (o.paper_form) return cmd_paper_form(o, n);

    const auto chars = select_chars(n, o.chars);
    json out = json::array();
    for (dr_char chi : chars) {
        dr_series* raw = nullptr;
        check(dr_series_generating(n, chi, o.order, &raw));
        std::unique_ptr<dr_series, void (*)(dr_series*)> series(raw, dr_series_free);
        std::vector<std::int64_t> coeffs;
        for (std::int64_t d = 0; d <= o.order; ++d) {
            std::int64_t v = 0;
            check(dr_series_coeff_int(series.get(), d, &v));
            coeffs.push_back(v);
        }
        const std::string name = char_name(chi);
        if (o.format == "json") {
            out.push_back({{"n", n}, {"char", name}, {"order", o.order}, {"coeffs", coeffs}});
        } else if (o.format == "csv") {
            if (chi.kind == chars.front().kind && chi.index == chars.front().index) {
                std::cout << "n,char,d,coeff\n";
            }
            for (std::size_t d = 0; d < coeffs.size(); ++d) {
                std::cout << n << ',' << name << ',' << d << ',' << coeffs[d] << '\n';
            }
        } else {
            std::vector<std::string> text;
            for (std::int64_t v : coeffs) text.push_back(std::to_string(v));
            if (chars.size() > 1) std::cout << name << ": ";
            std::cout << list(text) << '\n';
        }
    }
    if (o.format == "json") emit_json(out);
    return 0;
}

// ---------------------------------------------------------------- verify

struct Outcome {
    dr_status status = DR_OK;
    std::int64_t value = 0;
    std::string error;
};

Outcome run(const Cell& c, dr_method method, std::size_t cap) {
    Outcome out;
    out.status = dr_dim(c.n, c.d, c.chi, method, cap, &out.value);
    if (out.status != DR_OK) out.error = dr_last_error();
    return out;
}

json value_or_null(const Outcome& o) { return o.status == DR_OK ? json(o.value) : json(nullptr); }

int cmd_verify(const Options& o) {
    const auto ns = parse_range(o.n.empty() ? "3..8" : o.n, "--n");
    const auto ds = degrees(o, "0..10");
    const auto cells = grid(ns, ds, o.chars);
    const std::int64_t rank_limit = o.cap ? static_cast<std::int64_t>(*o.cap)
                                          : (o.with_rank ? DR_DEFAULT_CAP : kAutoRankLimit);

    struct Result {
        Outcome closed, char_sum;
        std::optional<Outcome> rank;
    };
    std::vector<Result> results(cells.size());
    run_grid(cells.size(), o.jobs, [&](std::size_t i) {
        const Cell& c = cells[i];
        Result& r = results[i];
        r.closed = run(c, DR_METHOD_CLOSED_FORM, 0);
        r.char_sum = run(c, DR_METHOD_CHAR_SUM, 0);
        std::int64_t size = 0;
        if (dr_monomial_count(c.n, c.d, &size) == DR_OK && size <= rank_limit) {
            r.rank = run(c, DR_METHOD_RANK, static_cast<std::size_t>(rank_limit));
        }
    });

    json mismatches = json::array();
    std::size_t rank_checked = 0;
    bool overflow = false;
    auto mismatch = [&](const Cell& c, const Outcome& got, const Outcome& expected, const char* oracle) {
        json record = {{"n", c.n},
                       {"d", c.d},
                       {"char", char_name(c.chi)},
                       {"dim", value_or_null(got)},
                       {"method", "closed_form"},
                       {"expected", value_or_null(expected)},
                       {"got", value_or_null(got)},
                       {"oracle", oracle}};
        if (!got.error.empty()) record["error"] = got.error;
        if (!expected.error.empty()) record["oracle_error"] = expected.error;
        mismatches.push_back(std::move(record));
    };
    for (std::size_t i = 0; i < cells.size(); ++i) {
        const Result& r = results[i];
        for (const Outcome* x : {&r.closed, &r.char_sum}) overflow = overflow || x->status == DR_ERR_OVERFLOW;
        if (r.rank) overflow = overflow || r.rank->status == DR_ERR_OVERFLOW;
        if (overflow) continue;
        if (r.closed.status != DR_OK || r.char_sum.status != DR_OK || r.closed.value != r.char_sum.value) {
            mismatch(cells[i], r.closed, r.char_sum, "char_sum");
        }
        if (r.rank) {
            ++rank_checked;
            if (r.closed.status != DR_OK || r.rank->status != DR_OK || r.closed.value != r.rank->value) {
                mismatch(cells[i], r.closed, *r.rank, "rank");
            }
        }
    }
    if (overflow) throw Failure{kExitCap, "verify: a dimension in the grid does not fit in 64 bits"};

    const bool pass = mismatches.empty();
    if (o.format == "json") {
        json out = {{"n", {ns.front(), ns.back()}},
                    {"d", {ds.front(), ds.back()}},
                    {"cells", cells.size()},
                    {"char_sum_checked", cells.size()},
                    {"rank_checked", rank_checked},
                    {"rank_limit", rank_limit},
                    {"mismatches", mismatches.size()},
                    {"status", pass ? "pass" : "fail"},
                    {"failures", mismatches}};
        emit_json(out);
    } else if (o.format == "csv") {
        std::cout << "n,d,char,closed_form,char_sum,rank,status\n";
        for (std::size_t i = 0; i < cells.size(); ++i) {
            const Result& r = results[i];
            auto text = [](const Outcome& x) { return x.status == DR_OK ? std::to_string(x.value) : "error"; };
            const bool ok = r.closed.status == DR_OK && r.char_sum.status == DR_OK &&
                            r.closed.value == r.char_sum.value &&
                            (!r.rank || (r.rank->status == DR_OK && r.rank->value == r.closed.value));
            std::cout << cells[i].n << ',' << cells[i].d << ',' << char_name(cells[i].chi) << ','
                      << text(r.closed) << ',' << text(r.char_sum) << ',' << (r.rank ? text(*r.rank) : "")
                      << ',' << (ok ? "pass" : "fail") << '\n';
        }
    } else {
        std::cout << "n " << ns.front() << ".." << ns.back() << ", d " << ds.front() << ".." << ds.back()
                  << ": " << cells.size() << " cells\n"
                  << "  closed_form vs char_sum: " << cells.size() << " checked\n"
                  << "  closed_form vs rank:     " << rank_checked << " checked (basis <= " << rank_limit
                  << ")\n";
        if (pass) {
            std::cout << paint("PASS", "32") << '\n';
        } else {
            std::cout << paint("FAIL", "31") << ": " << mismatches.size() << " mismatch"
                      << (mismatches.size() == 1 ? "" : "es") << '\n'
                      << "first failure: " << mismatches.front().dump() << '\n';
        }
    }
    return pass ? 0 : kExitMismatch;
}

// ---------------------------------------------------------------- scan-positivity

int cmd_scan(const Options& o) {
    const auto ns = parse_range(o.n.empty() ? "3..8" : o.n, "--n");
    std::vector<std::int64_t> ds;
    for (std::int64_t d : degrees(o, "1..10")) {
        if (d >= 1) ds.push_back(d); // constants are excluded
    }
    if (ds.empty()) throw Failure{kExitUsage, "scan-positivity: degree range has no d >= 1"};
    const auto cells = grid(ns, ds, o.chars);

    std::vector<Outcome> results(cells.size());
    run_grid(cells.size(), o.jobs, [&](std::size_t i) { results[i] = run(cells[i], DR_METHOD_CLOSED_FORM, 0); });

    std::vector<std::size_t> zeros;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (results[i].status != DR_OK) throw Failure{exit_code_for(results[i].status), results[i].error};
        if (results[i].value == 0) zeros.push_back(i);
    }
    // per character name: zero count and the distinct degrees where they occur
    std::map<std::string, std::pair<std::size_t, std::set<std::int64_t>>> summary;
    for (std::size_t i : zeros) {
        auto& entry = summary[char_name(cells[i].chi)];
        ++entry.first;
        entry.second.insert(cells[i].d);
    }

    if (o.format == "json") {
        json list = json::array();
        for (std::size_t i : zeros) {
            list.push_back({{"n", cells[i].n}, {"d", cells[i].d}, {"char", char_name(cells[i].chi)}});
        }
        json per_char = json::array();
        for (const auto& [name, entry] : summary) {
            per_char.push_back({{"char", name}, {"zeros", entry.first}, {"degrees", entry.second}});
        }
        emit_json({{"cells", cells.size()}, {"zeros", list}, {"summary", per_char}});
    } else if (o.format == "csv") {
        std::cout << "n,d,char\n";
        for (std::size_t i : zeros) {
            std::cout << cells[i].n << ',' << cells[i].d << ',' << char_name(cells[i].chi) << '\n';
        }
    } else {
        std::cout << cells.size() << " cells scanned, " << zeros.size() << " with dimension 0\n";
        for (std::size_t i : zeros) {
            std::cout << "  n=" << cells[i].n << " d=" << cells[i].d << " " << char_name(cells[i].chi) << '\n';
        }
        for (const auto& [name, entry] : summary) {
            std::cout << name << ": " << entry.first << " zero" << (entry.first == 1 ? "" : "s") << " at d in {";
            bool first = true;
            for (std::int64_t d : entry.second) {
                std::cout << (first ? "" : ", ") << d;
                first = false;
            }
            std::cout << "}\n";
        }
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Dimensions of relative symmetric polynomials for dihedral groups"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(dr_version()));
    Options o;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", o.format, "plain, json or csv")
            ->check(CLI::IsMember({"plain", "json", "csv"}));
        sub->add_option("--jobs", o.jobs, "worker threads")->check(CLI::Range(1u, 256u));
    };
    auto add_grid = [&](CLI::App* sub) {
        sub->add_option("--n", o.n, "n, a..b or a comma list");
        sub->add_option("--d", o.d, "d, a..b or a comma list");
        sub->add_option("--dmax", o.dmax, "shorthand for --d 0..dmax");
    };
    auto add_cap = [&](CLI::App* sub) {
        sub->add_option("--cap", o.cap, "rank-oracle monomial basis cap");
    };

    CLI::App* dim = app.add_subcommand("dim", "dimension of H_d(D_n, chi)");
    add_grid(dim);
    dim->add_option("--char", o.chars, "chi1..chi4, psi:<h>, psi or all");
    dim->add_option("--method", o.method, "closed-form, char-sum or rank");
    add_cap(dim);
    add_common(dim);

    CLI::App* table = app.add_subcommand("table", "all characters of D_n by degree");
    add_grid(table);
    table->add_option("--method", o.method, "closed-form, char-sum or rank");
    add_cap(table);
    add_common(table);

    CLI::App* series = app.add_subcommand("series", "generating function coefficients");
    series->add_option("--n", o.n, "n");
    series->add_option("--char", o.chars, "chi1..chi4, psi:<h>, psi or all");
    series->add_option("--order", o.order, "truncation degree");
    series->add_flag("--paper-form", o.paper_form, "compare the printed closed forms instead");
    add_common(series);

    CLI::App* verify = app.add_subcommand("verify", "closed form against both oracles");
    add_grid(verify);
    verify->add_option("--char", o.chars, "chi1..chi4, psi:<h>, psi or all");
    verify->add_flag("--with-rank", o.with_rank, "rank oracle up to --cap (default 300)");
    add_cap(verify);
    add_common(verify);

    CLI::App* scan = app.add_subcommand("scan-positivity", "zero-dimensional components, d >= 1");
    add_grid(scan);
    scan->add_option("--char", o.chars, "chi1..chi4, psi:<h>, psi or all");
    add_common(scan);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : kExitUsage;
    }

    try {
        if (o.cap && *o.cap == 0) throw Failure{kExitUsage, "--cap must be positive"};
        if (dim->parsed()) return cmd_dim(o);
        if (table->parsed()) return cmd_table(o);
        if (series->parsed()) return cmd_series(o);
        if (verify->parsed()) return cmd_verify(o);
        return cmd_scan(o);
    } catch (const Failure& f) {
        std::cerr << "dihedral: " << f.message << '\n';
        return f.code;
    } catch (const std::exception& e) {
        std::cerr << "dihedral: " << e.what() << '\n';
        return kExitMismatch;
    }
}
