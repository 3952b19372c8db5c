#pragma once

#include "fibvar/errors.hpp"
#include "fibvar/root_isolation.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace fibvar {

/// Growth exponents, as decimals at the requested precision and as long doubles.
struct AsymptoticConstants {
    int digits = kDefaultDigits;
    std::string phi;           // (1 + sqrt 5) / 2
    std::string lambda;        // log 2 / log phi, growth exponent of A(H)
    std::string exponent_main; // log lambda_1 / log phi, growth exponent of V(H)
    std::string exponent_cs;   // 2 lambda - 1, the Cauchy-Schwarz lower exponent

    long double phi_value = 0;
    long double lambda_value = 0;
    long double exponent_main_value = 0;
    long double exponent_cs_value = 0;
};

AsymptoticConstants exponent_report(int digits = kDefaultDigits);

struct FigureRow {
    std::uint64_t H;
    std::uint64_t V;
    long double norm_cs;   // V * H^(1 - 2 lambda)
    long double norm_main; // V * H^(-exponent_main)
};

FigureRow figure_row(std::uint64_t H, std::uint64_t V, const AsymptoticConstants& constants);

/// Rows for 1 <= H <= h_max.
std::vector<FigureRow> figure_rows(std::uint64_t h_max, const AsymptoticConstants& constants,
                                   const Budget& budget = {});

/// Header `H,V,norm_cs,norm_main`, one LF-terminated row per H.
void write_figure_csv(std::ostream& out, std::uint64_t h_max, const AsymptoticConstants& constants,
                      const Budget& budget = {});

/// Fixed-point rendering with `significant` significant digits (no exponent).
std::string format_significant(long double x, int significant = 12);

} // namespace fibvar
