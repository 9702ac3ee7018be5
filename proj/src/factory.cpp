#include "polargap/factory.hpp"

#include "polargap/backlund.hpp"
#include "polargap/errors.hpp"
#include "polargap/onegap.hpp"
#include "polargap/twogap.hpp"

namespace polargap {

namespace {

int index_of(const std::string& branch) {
  if (branch.size() == 1 && branch[0] >= '1' && branch[0] <= '3') return branch[0] - '0';
  throw Error(ErrorCode::invalid_argument, "branch must be 1, 2 or 3, got '" + branch + "'");
}

}  // namespace

const std::vector<std::string>& density_families() {
  static const std::vector<std::string> f{"onegap",          "onegap-cusp",     "twogap-pm", "twogap-alpha",
                                          "backlund-onegap", "backlund-twogap", "soliton"};
  return f;
}

Density make_density(const std::string& family, const std::string& branch, const elliptic::LatticeParams& L,
                     double gamma) {
  if (family == "onegap") return onegap::build_onegap(index_of(branch), L);
  if (family == "onegap-cusp") return onegap::build_cusp(index_of(branch), L);
  if (family == "backlund-onegap") return onegap::build_hat(index_of(branch), L);
  if (family == "twogap-pm" || family == "twogap-alpha") {
    const auto b = twogap::parse_branch(branch);
    if (b.is_pm() != (family == "twogap-pm")) {
      throw Error(ErrorCode::invalid_argument, "branch '" + branch + "' does not belong to " + family);
    }
    return twogap::build_twogap(b, L);
  }
  if (family == "backlund-twogap") return backlund::build_backlund_twogap(twogap::parse_branch(branch), L);
  if (family == "soliton") return onegap::soliton_limit(gamma);
  throw Error(ErrorCode::invalid_argument, "unknown family '" + family + "'");
}

}  // namespace polargap
