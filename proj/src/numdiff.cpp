#include "polargap/numdiff.hpp"

namespace polargap::numdiff {

namespace {

double d1(const std::function<double(double)>& f, double y, double h) {
  return (-f(y + 2 * h) + 8 * f(y + h) - 8 * f(y - h) + f(y - 2 * h)) / (12 * h);
}

double d2(const std::function<double(double)>& f, double y, double h) {
  return (-f(y + 2 * h) + 16 * f(y + h) - 30 * f(y) + 16 * f(y - h) - f(y - 2 * h)) / (12 * h * h);
}

}  // namespace

double first_derivative(const std::function<double(double)>& f, double y, double h) {
  return (16 * d1(f, y, 0.5 * h) - d1(f, y, h)) / 15;
}

double second_derivative(const std::function<double(double)>& f, double y, double h) {
  return (16 * d2(f, y, 0.5 * h) - d2(f, y, h)) / 15;
}

}  // namespace polargap::numdiff
