#include "fibvar/analysis.hpp"

#include "fibvar/moments.hpp"

#include <fmt/format.h>
#include <mpfr.h>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <iterator>
#include <ostream>
#include <stdexcept>

namespace fibvar {

namespace {

class BigFloat {
public:
    explicit BigFloat(mpfr_prec_t bits) { mpfr_init2(value_, bits); }
    ~BigFloat() { mpfr_clear(value_); }
    BigFloat(const BigFloat&) = delete;
    BigFloat& operator=(const BigFloat&) = delete;

    mpfr_ptr get() { return value_; }
    mpfr_srcptr get() const { return value_; }

    std::string decimal(int digits) const
    {
        // %.*Rf rounds to nearest
        char* text = nullptr;
        if (mpfr_asprintf(&text, "%.*RNf", digits, value_) < 0)
            throw std::runtime_error("mpfr_asprintf failed");
        std::string result(text);
        mpfr_free_str(text);
        return result;
    }

    long double to_long_double() const { return mpfr_get_ld(value_, MPFR_RNDN); }

private:
    mpfr_t value_;
};

mpfr_prec_t bits_for(int digits)
{
    // log2(10) ~ 3.33 bits per digit plus guard bits
    return static_cast<mpfr_prec_t>(digits) * 4 + 64;
}

} // namespace

AsymptoticConstants exponent_report(int digits)
{
    if (digits < 1)
        throw std::domain_error("exponent_report: precision must be >= 1");
    const mpfr_prec_t bits = bits_for(digits);

    BigFloat phi(bits), log_phi(bits), lambda(bits), log_two(bits);
    BigFloat lambda_1(bits), log_lambda_1(bits), main(bits), cs(bits);

    mpfr_sqrt_ui(phi.get(), 5, MPFR_RNDN);
    mpfr_add_ui(phi.get(), phi.get(), 1, MPFR_RNDN);
    mpfr_div_ui(phi.get(), phi.get(), 2, MPFR_RNDN);
    mpfr_log(log_phi.get(), phi.get(), MPFR_RNDN);

    mpfr_const_log2(log_two.get(), MPFR_RNDN);
    mpfr_div(lambda.get(), log_two.get(), log_phi.get(), MPFR_RNDN);

    // a few digits beyond the output so the bracket error stays invisible
    const RationalPolynomial cubic = cubic_factor();
    const auto roots = isolate_real_roots(cubic, digits + 5);
    mpfr_set_q(lambda_1.get(), roots[0].midpoint().get_mpq_t(), MPFR_RNDN);
    mpfr_log(log_lambda_1.get(), lambda_1.get(), MPFR_RNDN);
    mpfr_div(main.get(), log_lambda_1.get(), log_phi.get(), MPFR_RNDN);

    mpfr_mul_ui(cs.get(), lambda.get(), 2, MPFR_RNDN);
    mpfr_sub_ui(cs.get(), cs.get(), 1, MPFR_RNDN);

    AsymptoticConstants constants;
    constants.digits = digits;
    constants.phi = phi.decimal(digits);
    constants.lambda = lambda.decimal(digits);
    constants.exponent_main = main.decimal(digits);
    constants.exponent_cs = cs.decimal(digits);
    constants.phi_value = phi.to_long_double();
    constants.lambda_value = lambda.to_long_double();
    constants.exponent_main_value = main.to_long_double();
    constants.exponent_cs_value = cs.to_long_double();
    return constants;
}

FigureRow figure_row(std::uint64_t H, std::uint64_t V, const AsymptoticConstants& constants)
{
    const auto h = static_cast<long double>(H);
    const auto v = static_cast<long double>(V);
    return {H, V, v * std::pow(h, -constants.exponent_cs_value), v * std::pow(h, -constants.exponent_main_value)};
}

std::vector<FigureRow> figure_rows(std::uint64_t h_max, const AsymptoticConstants& constants, const Budget& budget)
{
    if (h_max < 1)
        throw std::domain_error("figure: h_max must be >= 1");
    const MomentTable moments = moment_table(h_max, budget);
    std::vector<FigureRow> rows;
    rows.reserve(h_max);
    for (std::uint64_t H = 1; H <= h_max; ++H)
        rows.push_back(figure_row(H, moments.v[H], constants));
    return rows;
}

void write_figure_csv(std::ostream& out, std::uint64_t h_max, const AsymptoticConstants& constants,
                      const Budget& budget)
{
    const auto rows = figure_rows(h_max, constants, budget);
    fmt::memory_buffer buffer;
    fmt::format_to(std::back_inserter(buffer), "H,V,norm_cs,norm_main\n");
    for (const FigureRow& row : rows)
        fmt::format_to(std::back_inserter(buffer), "{},{},{},{}\n", row.H, row.V, format_significant(row.norm_cs),
                       format_significant(row.norm_main));
    out.write(buffer.data(), static_cast<std::streamsize>(buffer.size()));
}

std::string format_significant(long double x, int significant)
{
    if (significant < 1)
        throw std::domain_error("format_significant: need at least one digit");
    if (x == 0 || !std::isfinite(x))
        return fmt::format("{:.{}f}", x, significant - 1);
    const int magnitude = static_cast<int>(std::floor(std::log10(std::fabs(x))));
    int decimals = std::max(0, significant - 1 - magnitude);
    std::string text = fmt::format("{:.{}f}", x, decimals);
    // rounding can carry into a new leading digit (9.99.. -> 10.0..)
    const auto digit_count = static_cast<int>(std::count_if(text.begin(), text.end(), ::isdigit));
    const auto leading_zeros = [&] {
        int zeros = 0;
        for (char c : text) {
            if (c == '-' || c == '.')
                continue;
            if (c != '0')
                break;
            ++zeros;
        }
        return zeros;
    }();
    if (digit_count - leading_zeros > significant && decimals > 0)
        text = fmt::format("{:.{}f}", x, decimals - 1);
    return text;
}

} // namespace fibvar
