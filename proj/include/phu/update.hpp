#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "phu/complex.hpp"
#include "phu/reduce.hpp"

namespace phu {

enum class Algorithm { smur, esmur };

/// How a single simplex was detached from the decomposition.
///   zero_column: R column empty, V row nonzero elsewhere
///   swap:        R column nonzero and its support holds a zero column
///   else_branch: R column nonzero, support holds only nonzero columns
///   trivial:     empty support; the column is dropped as is
enum class Branch { zero_column, swap, else_branch, trivial };

const char* to_string(Algorithm a);
const char* to_string(Branch b);
Algorithm parse_algorithm(const std::string& s);

/// Raised when a precondition of an update step does not hold.
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when an update leaves the decomposition in a state the algorithm
/// guarantees cannot happen.
class ConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

struct StepReport {
    index_t position = 0;
    int dim = 0;
    Branch branch = Branch::trivial;
    std::int64_t additions_R = 0;
    std::int64_t additions_V = 0;
    std::int64_t swaps = 0;  // pivots handed from one column to another (esmur)
    std::int64_t support_size = 0;
};

struct RemovalReport {
    std::vector<StepReport> steps;

    std::vector<index_t> removed() const;
    std::int64_t additions_R() const;
    std::int64_t additions_V() const;
    std::int64_t swaps() const;
};

/// Live columns other than `tau`, in slot order, whose V column has a 1 in row tau.
std::vector<index_t> support_set(const Decomposition& dec, index_t tau);

/// Adds column tau to its whole support, drops it and re-runs the reduction on the
/// columns of the same dimension from the first touched one onward.
StepReport smur_fix(Decomposition& dec, index_t tau);

/// One addition per support column and no re-reduction. Each support column
/// absorbs the earlier column of lowest pivot among tau and the support; a zero
/// column counts as lowest, so when one exists everything after it only gains V
/// columns.
StepReport esmur_fix(Decomposition& dec, index_t tau);

/// Detaches a zero R column: its V column is added to every column carrying it.
StepReport remove_positive_column(Decomposition& dec, index_t tau);

/// Retires row tau after its column is gone. Throws ConsistencyError if any live
/// column still references it.
void delete_row(Decomposition& dec, index_t tau);

/// Removes sigma and all of its cofaces, highest dimension first.
RemovalReport mur_remove(Decomposition& dec, const Filtration& f, CofaceIndex& idx,
                         index_t sigma, Algorithm algorithm);

namespace testing {
/// When set, esmur skips the R addition wherever a pivot would be handed over.
/// Used as a negative control for the verification harness.
void set_fault_injection(bool on);
bool fault_injection();
}  // namespace testing

}  // namespace phu
