#pragma once

#include <stdexcept>
#include <string>

namespace fermatinv {

/* Two families of failures: bad caller input (maps to CLI exit code 2) and
 * computations that could not be completed (exit code 3). */
class input_error : public std::invalid_argument
{
  public:
    using std::invalid_argument::invalid_argument;
};

class computation_error : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

class factorization_incomplete : public computation_error
{
  public:
    using computation_error::computation_error;
};

class hensel_hypothesis_fails : public computation_error
{
  public:
    using computation_error::computation_error;
};

class field_error : public computation_error
{
  public:
    using computation_error::computation_error;
};

class point_not_rational : public computation_error
{
  public:
    using computation_error::computation_error;
};

class roots_not_rational : public computation_error
{
  public:
    using computation_error::computation_error;
};

class bad_reduction : public computation_error
{
  public:
    using computation_error::computation_error;
};

class ramified_prime : public computation_error
{
  public:
    using computation_error::computation_error;
};

class vandiver_not_assumed : public computation_error
{
  public:
    using computation_error::computation_error;
};

class bound_exceeded : public computation_error
{
  public:
    using computation_error::computation_error;
};

} // namespace fermatinv
