#pragma once

#include "qe/picard.hpp"
#include "qe/smith.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace qe {

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Fiber {
    std::vector<int> members; // indices into neg_two
    std::vector<int> marks;
};

struct SurfaceConfiguration {
    std::string name;
    int characteristic = 2;
    std::string dynkin_label;
    std::vector<DivisorClass> neg_two;
    std::vector<Fiber> fibers;
    DivisorClass zero_section = DivisorClass::exceptional(9);
};

struct FiberReport {
    int index;
    std::string affine_type;
    DivisorClass sum;
};

// Checks every (-2)-class and every fiber sum; throws ConfigError naming the
// offending fiber and its residual class.
std::vector<FiberReport> check_fibers(const SurfaceConfiguration& config);

// Affine Dynkin type of a connected (-2)-configuration from its Gram matrix.
std::string affine_type(const IntMatrix& gram);
// Connected components of the (-2)-curves (index lists, each sorted).
std::vector<std::vector<int>> dynkin_components(const std::vector<DivisorClass>& curves);

struct MordellWeilGroup {
    std::vector<int64_t> invariant_factors;
    int64_t order = 1;
};

MordellWeilGroup mordell_weil(const SurfaceConfiguration& config);

// Sections up to the degree bound; verifies the count against |MW|.
std::vector<DivisorClass> enumerate_minus_one_curves(const SurfaceConfiguration& config, int degree_bound = 5);
// Same search without the count check.
std::vector<DivisorClass> search_minus_one_curves(const SurfaceConfiguration& config, int degree_bound);

// Stored coordinates (coeff_l, b_1..b_9) as a vector.
std::vector<int64_t> coords(const DivisorClass& d);
DivisorClass from_coords(const std::vector<int64_t>& v);

} // namespace qe
