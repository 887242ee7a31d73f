#pragma once

// The ten real graded division algebra classes, their AZ labels, and symmetry
// detection on Hamiltonians (floating point or exact Gaussian rationals).

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "magb/cycmat.hpp"
#include "magb/gradedalg.hpp"

namespace magb {

enum class Tenfold { R0, R1, R2, R3, R4, R5, R6, R7, C0, C1 };

struct TenfoldClass {
    Tenfold tag;
    std::string az_label;  // AI, BDI, D, DIII, AII, CII, C, CI, A, AIII
    int trs = 0;           // 0, +1, -1
    int phs = 0;           // 0, +1, -1
    int chiral = 0;        // 0, 1
    bool operator==(const TenfoldClass& o) const { return tag == o.tag; }
};

const std::vector<TenfoldClass>& tenfold_table();
TenfoldClass tenfold_by_tag(Tenfold t);
std::string tenfold_tag_name(Tenfold t);

// division-algebra branch classifier over Q; requires the caller's assertion
// that the input is a graded division algebra (necessary conditions checked)
TenfoldClass tenfold_classify(const GradedAlgebra& a, bool assume_division = true);

int clifford_class(int p, int q);  // (p - q) mod 8

TenfoldClass az_lookup(int t, int c, int s);
void az_row(const TenfoldClass& cls, int& t, int& c, int& s);  // inverse of lookup

// floating-point detection
struct ComplexMatrix {
    int n = 0;
    std::vector<std::complex<double>> e;  // row-major
    std::complex<double>& at(int r, int c) { return e[(std::size_t)r * n + c]; }
    const std::complex<double>& at(int r, int c) const { return e[(std::size_t)r * n + c]; }
};

TenfoldClass az_detect(const ComplexMatrix& h, const std::optional<ComplexMatrix>& u_t,
                       const std::optional<ComplexMatrix>& u_c, double tol = -1.0);

// exact detection over Q(i); tolerances do not apply
TenfoldClass az_detect_exact(const CycMat& h, const std::optional<CycMat>& u_t,
                             const std::optional<CycMat>& u_c);

}  // namespace magb
