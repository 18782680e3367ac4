#include "spectra/reference_tables.hpp"

#include <array>

namespace spectra::reference {

namespace {

// Rows nu = 0..9, columns l = 0..3.
constexpr std::array<K1Entry, 40> kK1 = {{
    {0, 0, "-0.365"},   {0, 1, "-0.117"},   {0, 2, "-0.0541"},  {0, 3, "-0.0308"},
    {1, 0, "-0.106"},   {1, 1, "-0.0532"},  {1, 2, "-0.0306"},  {1, 3, "-0.0198"},
    {2, 0, "-0.0497"},  {2, 1, "-0.0303"},  {2, 2, "-0.0197"},  {2, 3, "-0.0138"},
    {3, 0, "-0.0287"},  {3, 1, "-0.0195"},  {3, 2, "-0.0137"},  {3, 3, "-0.0101"},
    {4, 0, "-0.0187"},  {4, 1, "-0.0136"},  {4, 2, "-0.0101"},  {4, 3, "-0.00776"},
    {5, 0, "-0.0131"},  {5, 1, "-0.0100"},  {5, 2, "-0.00774"}, {5, 3, "-0.00613"},
    {6, 0, "-0.00972"}, {6, 1, "-0.00769"}, {6, 2, "-0.00612"}, {6, 3, "-0.00497"},
    {7, 0, "-0.00749"}, {7, 1, "-0.00608"}, {7, 2, "-0.00496"}, {7, 3, "-0.00411"},
    {8, 0, "-0.00595"}, {8, 1, "-0.00493"}, {8, 2, "-0.00410"}, {8, 3, "-0.00346"},
    {9, 0, "-0.00483"}, {9, 1, "-0.00408"}, {9, 2, "-0.00345"}, {9, 3, "-0.00295"},
}};

constexpr std::array<HarmonicEntry, 12> kHarmonic = {{
    {1e2, 0, "-3.38(-3)"},   {1e2, 1, "-2.8(-3)"},   {1e2, 2, "-2.2(-3)"},
    {1e3, 0, "-3.583(-4)"},  {1e3, 1, "-3.39(-4)"},  {1e3, 2, "-3.20(-4)"},
    {1e4, 0, "-3.6485(-5)"}, {1e4, 1, "-3.588(-5)"}, {1e4, 2, "-3.527(-5)"},
    {1e5, 0, "-3.6692(-6)"}, {1e5, 1, "-3.650(-6)"}, {1e5, 2, "-3.631(-6)"},
}};

}  // namespace

std::span<const K1Entry> k1_table() { return kK1; }
std::span<const HarmonicEntry> harmonic_table() { return kHarmonic; }

}  // namespace spectra::reference
