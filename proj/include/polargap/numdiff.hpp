#pragma once

#include <functional>

namespace polargap::numdiff {

/// Five-point central first derivative with one Richardson step (error O(h^6)).
double first_derivative(const std::function<double(double)>& f, double y, double h);

/// Five-point central second derivative with one Richardson step.
double second_derivative(const std::function<double(double)>& f, double y, double h);

}  // namespace polargap::numdiff
