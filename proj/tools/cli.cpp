#include "cli.hpp"

#include "fibvar/analysis.hpp"
#include "fibvar/closed_form.hpp"
#include "fibvar/diophantine.hpp"
#include "fibvar/fibonacci.hpp"
#include "fibvar/moments.hpp"
#include "fibvar/partition_counts.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ostream.h>
#include <fmt/ranges.h>

#include <algorithm>
#include <functional>
#include <ostream>
#include <stdexcept>
#include <vector>

namespace fibvar::cli {

namespace {

struct Settings {
    int precision = kDefaultDigits;
    Budget budget;
};

const char* verdict(bool pass)
{
    return pass ? "PASS" : "FAIL";
}

int status(bool pass)
{
    return pass ? kSuccess : kVerificationFailed;
}

int cmd_r(std::int64_t n, const Settings& s, std::ostream& out)
{
    fmt::print(out, "{}\n", r(n, s.budget));
    return kSuccess;
}

int cmd_zeckendorf(std::uint64_t n, std::ostream& out)
{
    const ZeckendorfRepr repr = zeckendorf(n);
    std::vector<std::string> terms, values;
    for (int index : repr.indices) {
        terms.push_back(fmt::format("F_{}", index));
        values.push_back(fmt::format("{}", fib_u64(index)));
    }
    fmt::print(out, "{} = {} = {}\n", n, fmt::join(terms, " + "), fmt::join(values, " + "));
    return kSuccess;
}

int cmd_table(std::uint64_t h_max, const Settings& s, std::ostream& out)
{
    const CountTable table = r_table(h_max, s.budget);
    fmt::memory_buffer buffer;
    fmt::format_to(std::back_inserter(buffer), "n,R\n");
    for (std::uint64_t n = 0; n <= h_max; ++n)
        fmt::format_to(std::back_inserter(buffer), "{},{}\n", n, table.r[n]);
    out.write(buffer.data(), static_cast<std::streamsize>(buffer.size()));
    return kSuccess;
}

int cmd_moments(std::uint64_t h_max, const Settings& s, std::ostream& out)
{
    const CountTable counts = r_table(h_max, s.budget);
    const MomentTable moments = moment_table(counts);
    fmt::memory_buffer buffer;
    fmt::format_to(std::back_inserter(buffer), "n,R,A,V\n");
    for (std::uint64_t n = 0; n <= h_max; ++n)
        fmt::format_to(std::back_inserter(buffer), "{},{},{},{}\n", n, counts.r[n], moments.a[n], moments.v[n]);
    out.write(buffer.data(), static_cast<std::streamsize>(buffer.size()));
    return kSuccess;
}

int cmd_verify_lemma(int from, int to, const Settings& s, std::ostream& out)
{
    const auto rows = verify_lemma(from, to, s.budget);
    bool all = true;
    for (const LemmaRow& row : rows) {
        fmt::print(out, "m={} lhs={} rhs={} {}\n", row.m, row.lhs, row.rhs, verdict(row.equal));
        all = all && row.equal;
    }
    return status(all);
}

int cmd_verify_cases(int from, int to, const Settings& s, std::ostream& out)
{
    if (to < from)
        throw std::domain_error("verify-cases: empty range");
    bool all = true;
    for (int m = from; m <= to; ++m) {
        const CaseReport report = verify_cases(m, s.budget);
        const CaseBreakdown& b = report.breakdown;
        fmt::print(out, "m={} total={} cases={} w={} {}\n", m, b.total, fmt::join(b.cases, ","), b.w_bruteforce,
                   verdict(report.pass()));
        for (const CaseCheck& check : report.checks)
            if (!check.pass)
                fmt::print(out, "  {}: observed {} expected {}\n", check.name, check.observed, check.expected);
        all = all && report.pass();
    }
    return status(all);
}

int cmd_verify_w(int from, int to, const Settings& s, std::ostream& out)
{
    if (from < 7)
        throw std::domain_error("verify-w: m must be >= 7");
    if (to < from)
        throw std::domain_error("verify-w: empty range");
    const FibMomentSeries series = fib_moment_series(std::max(to - 3, 2), s.budget);
    bool all = true;
    for (int m = from; m <= to; ++m) {
        const std::uint64_t brute = count_w(m, s.budget);
        const std::uint64_t closed = w_closed_form(m, series);
        fmt::print(out, "m={} w_bruteforce={} w_closed_form={} {}\n", m, brute, closed, verdict(brute == closed));
        all = all && brute == closed;
    }
    return status(all);
}

int cmd_solve(const Settings& s, std::ostream& out)
{
    const ClosedFormSolution sol = solve_closed_form(s.precision);
    const auto& c = sol.c_field;
    fmt::print(out, "g0 = {}\ng1 = {}\ng2 = {}\n", c[0].get_str(), c[1].get_str(), c[2].get_str());
    fmt::print(out, "c3 = {} (exactly 5/8: {})\n", sol.c3.get_str(), sol.c3 == Rational(5, 8) ? "yes" : "no");
    fmt::print(out, "c4 = {} (exactly 3/8: {})\n", sol.c4.get_str(), sol.c4 == Rational(3, 8) ? "yes" : "no");
    fmt::print(out, "lambda_1 = {}\nlambda_2 = {}\nlambda_5 = {}\n", sol.dominant_root().value,
               sol.negative_root().value, sol.small_root().value);
    const auto coefficients = sol.coefficient_vector();
    for (std::size_t i = 0; i < coefficients.size(); ++i)
        fmt::print(out, "c{} ~ {}\n", i + 1, coefficients[i].decimal);
    return kSuccess;
}

int cmd_closed_form(int from, int to, const Settings& s, std::ostream& out)
{
    if (from < 2 || to < from)
        throw std::domain_error("closed-form: need 2 <= from <= to");
    const ClosedFormSolution sol = solve_closed_form(s.precision);
    fmt::print(out, "m,v_m\n");
    bool integral = true;
    for (int m = from; m <= to; ++m) {
        const Rational v = closed_form_v(m, sol);
        integral = integral && is_integer(v);
        fmt::print(out, "{},{}\n", m, v.get_str());
    }
    return status(integral);
}

int cmd_exponents(const Settings& s, std::ostream& out)
{
    const AsymptoticConstants k = exponent_report(s.precision);
    fmt::print(out, "phi = {}\nlambda = {}\nexponent_main = {}\nexponent_cs = {}\n", k.phi, k.lambda,
               k.exponent_main, k.exponent_cs);
    const bool ordered = k.exponent_cs_value < k.exponent_main_value;
    fmt::print(out, "exponent_cs < exponent_main: {}\n", verdict(ordered));
    return status(ordered);
}

int cmd_figure(std::uint64_t h_max, const Settings& s, std::ostream& out)
{
    write_figure_csv(out, h_max, exponent_report(s.precision), s.budget);
    return kSuccess;
}

int cmd_check_carlitz(int m_max, const Settings& s, std::ostream& out)
{
    const CarlitzReport report = check_carlitz(m_max, s.budget);
    for (const CarlitzRow& row : report.rows)
        fmt::print(out, "m={} R(F_m)={} floor(m/2)={} {}\n", row.m, row.r_at_fib, row.expected, verdict(row.pass));
    return status(report.pass);
}

int cmd_check_sqrt_bound(std::uint64_t h_max, const Settings& s, std::ostream& out)
{
    const SqrtBoundReport report = check_sqrt_bound(h_max, s.budget);
    if (report.bound_holds)
        fmt::print(out, "R(n)^2 <= n+1 for 0 <= n <= {}: PASS\n", h_max);
    else
        fmt::print(out, "R(n)^2 <= n+1 for 0 <= n <= {}: FAIL at n={}\n", h_max, report.first_violation);
    fmt::print(out, "equality at: {}\n", fmt::join(report.equality_positions, " "));
    fmt::print(out, "F_m^2-1 <= H: {}\n", fmt::join(report.expected_positions, " "));
    fmt::print(out, "{}\n", verdict(report.pass));
    return status(report.pass);
}

} // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Fibonacci partition function: counts, moments, verifications and closed form", "fibvar"};
    app.require_subcommand(1);
    app.fallthrough();

    Settings settings;
    app.add_option("--precision", settings.precision, "decimal digits for roots and embeddings")
        ->check(CLI::Range(1, 10000));
    app.add_option("--budget", settings.budget.max_entries, "maximum table entries")->check(CLI::PositiveNumber);
    app.add_option("--enum-budget", settings.budget.max_enumeration_index, "largest enumerable Fibonacci index")
        ->check(CLI::Range(4, 40));

    std::function<int()> action;

    std::int64_t n = 0;
    auto* sub_r = app.add_subcommand("r", "R(n)");
    sub_r->add_option("--n", n, "argument")->required();
    sub_r->callback([&] { action = [&] { return cmd_r(n, settings, out); }; });

    std::uint64_t zn = 1;
    auto* sub_z = app.add_subcommand("zeckendorf", "Zeckendorf expansion of n");
    sub_z->add_option("--n", zn, "positive integer")->required()->check(CLI::PositiveNumber);
    sub_z->callback([&] { action = [&] { return cmd_zeckendorf(zn, out); }; });

    std::uint64_t h_max = 0;
    auto* sub_table = app.add_subcommand("table", "CSV of R(n) for 0 <= n <= H");
    sub_table->add_option("--h-max", h_max, "largest n")->required();
    sub_table->callback([&] { action = [&] { return cmd_table(h_max, settings, out); }; });

    auto* sub_moments = app.add_subcommand("moments", "CSV of R, A, V for 0 <= n <= H");
    sub_moments->add_option("--h-max", h_max, "largest n")->required();
    sub_moments->callback([&] { action = [&] { return cmd_moments(h_max, settings, out); }; });

    int from = 7, to = 28;
    auto* sub_lemma = app.add_subcommand("verify-lemma", "V(F_m) recurrence against the DP");
    sub_lemma->add_option("--from", from, "first m (>= 7)");
    sub_lemma->add_option("--to", to, "last m");
    sub_lemma->callback([&] { action = [&] { return cmd_verify_lemma(from, to, settings, out); }; });

    int case_from = 7, case_to = 16;
    auto add_range = [&](CLI::App* sub) {
        sub->add_option("--from", case_from, "first m");
        sub->add_option("--to", case_to, "last m");
        sub->add_option_function<int>("--m", [&](int m) { case_from = case_to = m; }, "single m");
    };
    auto* sub_cases = app.add_subcommand("verify-cases", "brute-force case counts against their closed forms");
    add_range(sub_cases);
    sub_cases->callback([&] { action = [&] { return cmd_verify_cases(case_from, case_to, settings, out); }; });

    auto* sub_w = app.add_subcommand("verify-w", "brute-force w_m against its closed form");
    add_range(sub_w);
    sub_w->callback([&] { action = [&] { return cmd_verify_w(case_from, case_to, settings, out); }; });

    auto* sub_solve = app.add_subcommand("solve", "exact closed-form coefficients");
    sub_solve->callback([&] { action = [&] { return cmd_solve(settings, out); }; });

    int cf_from = 2, cf_to = 28;
    auto* sub_cf = app.add_subcommand("closed-form", "V(F_m) from the closed form");
    sub_cf->add_option("--from", cf_from, "first m (>= 2)");
    sub_cf->add_option("--to", cf_to, "last m");
    sub_cf->add_option_function<int>("--m", [&](int m) { cf_from = cf_to = m; }, "single m");
    sub_cf->callback([&] { action = [&] { return cmd_closed_form(cf_from, cf_to, settings, out); }; });

    auto* sub_exp = app.add_subcommand("exponents", "phi, lambda and the growth exponents");
    sub_exp->callback([&] { action = [&] { return cmd_exponents(settings, out); }; });

    std::uint64_t figure_max = 6765;
    auto* sub_fig = app.add_subcommand("figure", "CSV of normalised V(H)");
    sub_fig->add_option("--h-max", figure_max, "largest H")->check(CLI::PositiveNumber);
    sub_fig->callback([&] { action = [&] { return cmd_figure(figure_max, settings, out); }; });

    int carlitz_max = 28;
    auto* sub_carlitz = app.add_subcommand("check-carlitz", "R(F_m) = floor(m/2)");
    sub_carlitz->add_option("--m", carlitz_max, "largest m");
    sub_carlitz->callback([&] { action = [&] { return cmd_check_carlitz(carlitz_max, settings, out); }; });

    std::uint64_t bound_max = 1'000'000;
    auto* sub_bound = app.add_subcommand("check-sqrt-bound", "R(n) <= sqrt(n+1) with its equality cases");
    sub_bound->add_option("--h-max", bound_max, "largest n");
    sub_bound->callback([&] { action = [&] { return cmd_check_sqrt_bound(bound_max, settings, out); }; });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n" << app.help();
        return kUsageError;
    }

    try {
        return action ? action() : kUsageError;
    } catch (const ResourceError& e) {
        err << "resource limit: " << e.what() << "\n";
        return kResourceExceeded;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return kUsageError;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kVerificationFailed;
    }
}

} // namespace fibvar::cli
