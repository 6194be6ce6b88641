#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "report.hpp"

namespace trideg::cli {

struct Options {
  std::uint64_t seed = 0;
  std::size_t cases = 100;
  std::size_t budget = 256;
  std::uint32_t field = 2;
  bool nil_chain = false;
  bool single = false;
};

Report cmd_cone(const std::string& map_path, const Options& o);
Report cmd_deg(const std::string& u_path, const std::string& v_path, const Options& o);
Report cmd_ged(const std::string& u_path, const std::string& v_path, const Options& o);
Report cmd_left_witness(const std::string& z_path, const std::string& v_path, const std::string& u_path,
                        const Options& o);
Report cmd_nilpotent(const std::string& v_path, const Options& o);
Report cmd_k0(const std::string& complex_path, const Options& o);
Report cmd_pair_decompose(const std::string& sum_path, const Options& o);
Report cmd_tower_deg(const std::string& tower_path, const Options& o);
Report cmd_obstruct(const std::string& complex_path, const Options& o);
Report cmd_zero_deg(const std::string& complex_path, const Options& o);
Report cmd_compare_cones(const std::string& witness_path, const Options& o);
Report cmd_two_pushout(const std::string& w1_path, const std::string& w2_path, const Options& o);
Report cmd_demo(const std::string& name, const Options& o);
Report cmd_prop_suite(const Options& o);

}  // namespace trideg::cli
