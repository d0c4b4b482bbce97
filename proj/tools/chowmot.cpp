#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "chowmot/chowmot.hpp"
#include "chowmot/golden.hpp"

namespace {

using namespace chowmot;
using Json = nlohmann::json;
namespace cj = chowmot::json;

enum class Format { text, json_out };

// Inline JSON if the argument starts with '{' or '[', a file path otherwise.
Json load(const std::string& arg, const std::string& what) {
  const auto first = arg.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (arg[first] == '{' || arg[first] == '[')) {
    try {
      return cj::parse_text(arg);
    } catch (const parse_error& e) {
      throw parse_error(what + ": " + e.what());
    }
  }
  std::ifstream in(arg);
  if (!in) throw parse_error(what + ": cannot open '" + arg + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return cj::parse_text(ss.str());
  } catch (const parse_error& e) {
    throw parse_error(what + " (" + arg + "): " + e.what());
  }
}

// "[1,2]" or {"factors": [1,2]}.
Variety load_variety(const std::string& arg) {
  const Json j = load(arg, "--variety");
  if (j.is_array()) return cj::variety_from_json(Json{{"factors", j}});
  return cj::variety_from_json(j);
}

std::vector<long> load_degrees(const std::string& arg) {
  const Json j = load(arg, "--line-bundle");
  if (!j.is_array()) throw parse_error("--line-bundle: expected an array of integers");
  std::vector<long> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_number_integer()) throw parse_error("--line-bundle: at /" + std::to_string(i) + ": expected an integer");
    out.push_back(static_cast<long>(j[i].get<long long>()));
  }
  return out;
}

struct Output {
  Format format = Format::text;

  void cycle(const Cycle& c) const {
    if (format == Format::json_out) {
      std::cout << cj::to_json(c).dump(2) << "\n";
    } else {
      std::cout << to_string(c) << "\n";
    }
  }
  void correspondence(const GradedCorrespondence& c) const {
    if (format == Format::json_out) {
      std::cout << cj::to_json(c).dump(2) << "\n";
    } else {
      std::cout << c.source().name() << " -> " << c.target().name() << ": " << to_string(c.cycle()) << "\n";
    }
  }
  void rational(const Rational& r) const {
    if (format == Format::json_out) {
      std::cout << Json{{"value", r.str()}}.dump(2) << "\n";
    } else {
      std::cout << r.str() << "\n";
    }
  }
  void raw(const Json& j, const std::string& text) const {
    if (format == Format::json_out) {
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << text;
    }
  }
};

BundleClass bundle_input(const std::string& bundle, const std::string& variety, const std::string& degrees) {
  if (!bundle.empty()) return cj::bundle_from_json(load(bundle, "--bundle"));
  if (variety.empty()) throw invalid_input("need --bundle, or --variety with --line-bundle");
  const Variety v = load_variety(variety);
  if (degrees.empty()) return tangent_class(v);
  return line_bundle(v, load_degrees(degrees));
}

std::string check_table(const std::vector<verify::CheckResult>& rs, bool& all) {
  std::ostringstream os;
  for (const auto& r : rs) {
    all = all && r.passed;
    os << (r.passed ? "PASS" : "FAIL") << "  " << r.name << "  (" << r.detail << ")\n";
  }
  return os.str();
}

Json check_json(const std::vector<verify::CheckResult>& rs) {
  Json arr = Json::array();
  for (const auto& r : rs) arr.push_back({{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
  return arr;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Chow-ring, characteristic-class and Chow-motive calculator"};
  app.require_subcommand(1);
  Output out;
  std::string format = "text";
  std::function<int()> action;

  auto add = [&](const std::string& name, const std::string& help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
    return sub;
  };

  // Shared argument slots; each subcommand binds the ones it uses.
  std::string variety, cycle, cycle2, corr_f, corr_g, corr, bundle, degrees, kclass, kernel_e, kernel_f, motive,
      projector;
  int component = -1;
  int twist = 0;
  int tate = 0;
  bool want_degree = false;
  bool want_dual = false;
  bool omit_sqrt_todd = false;
  long orlov_twist = 0;
  bool orlov_twist_set = false;
  bool tate_shift = false;
  std::uint64_t seed = 42;
  int samples = 200;

  {
    auto* s = add("ring", "Describe CH*(X), or operate on cycles");
    s->add_option("--variety", variety, "Variety, e.g. \"[1,2]\"");
    s->add_option("--cycle", cycle, "Cycle JSON");
    s->add_option("--times", cycle2, "Multiply --cycle by this cycle");
    s->add_option("--plus", corr, "Add this cycle to --cycle");
    s->add_option("--component", component, "Graded component of the result");
    s->add_flag("--degree", want_degree, "Print the degree of the result");
    s->callback([&] {
      action = [&] {
        if (cycle.empty()) {
          if (variety.empty()) throw invalid_input("ring: need --variety or --cycle");
          const Variety v = load_variety(variety);
          std::ostringstream os;
          os << v.name() << ": dim " << v.dim() << ", basis size " << v.basis_size() << ", relations";
          for (std::size_t i = 0; i < v.num_factors(); ++i) {
            os << " h" << (i + 1) << "^" << (v.factor(i) + 1) << " = 0";
          }
          os << "\n";
          out.raw(Json{{"variety", cj::to_json(v)}, {"dim", v.dim()}, {"basis_size", v.basis_size()}}, os.str());
          return 0;
        }
        Cycle c = cj::cycle_from_json(load(cycle, "--cycle"));
        if (!corr.empty()) c = c + cj::cycle_from_json(load(corr, "--plus"));
        if (!cycle2.empty()) c = intersect(c, cj::cycle_from_json(load(cycle2, "--times")));
        if (component >= 0) c = graded_component(c, component);
        if (want_degree) {
          out.rational(degree(c));
        } else {
          out.cycle(c);
        }
        return 0;
      };
    });
  }
  {
    auto* s = add("compose", "Compose graded correspondences: g o f");
    s->add_option("--f", corr_f, "Correspondence X -> Y")->required();
    s->add_option("--g", corr_g, "Correspondence Y -> Z")->required();
    s->callback([&] {
      action = [&] {
        const auto f = cj::correspondence_from_json(load(corr_f, "--f"));
        const auto g = cj::correspondence_from_json(load(corr_g, "--g"));
        out.correspondence(compose_graded(f, g));
        return 0;
      };
    });
  }
  {
    auto* s = add("transpose", "Transpose a correspondence");
    s->add_option("--corr", corr, "Correspondence X -> Y")->required();
    s->callback([&] {
      action = [&] {
        out.correspondence(transpose(cj::correspondence_from_json(load(corr, "--corr"))));
        return 0;
      };
    });
  }
  {
    auto* s = add("diagonal", "Diagonal class of X as a correspondence");
    s->add_option("--variety", variety, "Variety")->required();
    s->callback([&] {
      action = [&] {
        out.correspondence(diagonal_correspondence(load_variety(variety)));
        return 0;
      };
    });
  }
  for (const std::string name : {"chern-character", "todd"}) {
    auto* s = add(name, name == "todd" ? "Todd class of a bundle (tangent bundle by default)"
                                       : "Chern character of a bundle (tangent bundle by default)");
    s->add_option("--bundle", bundle, "BundleClass JSON");
    s->add_option("--variety", variety, "Variety");
    s->add_option("--line-bundle", degrees, "Line-bundle degrees, e.g. \"[3]\"");
    s->callback([&, name] {
      action = [&, name] {
        const BundleClass e = bundle_input(bundle, variety, degrees);
        out.cycle(name == "todd" ? todd_class(e) : chern_character(e));
        return 0;
      };
    });
  }
  {
    auto* s = add("sqrt-todd", "Square root of the Todd class of X");
    s->add_option("--variety", variety, "Variety")->required();
    s->callback([&] {
      action = [&] {
        out.cycle(sqrt_todd(load_variety(variety)));
        return 0;
      };
    });
  }
  {
    auto* s = add("tangent", "Tangent class of X");
    s->add_option("--variety", variety, "Variety")->required();
    s->callback([&] {
      action = [&] {
        const BundleClass t = tangent_class(load_variety(variety));
        out.raw(cj::to_json(t), "rank " + std::to_string(t.rank()) + ", c = " + to_string(t.total_chern()) + "\n");
        return 0;
      };
    });
  }
  {
    auto* s = add("euler", "Euler characteristic by Riemann-Roch");
    s->add_option("--kclass", kclass, "KClass JSON");
    s->add_option("--bundle", bundle, "BundleClass JSON");
    s->add_option("--variety", variety, "Variety");
    s->add_option("--line-bundle", degrees, "Line-bundle degrees");
    s->callback([&] {
      action = [&] {
        const KClass k = kclass.empty() ? KClass::of_bundle(bundle_input(bundle, variety, degrees))
                                        : cj::kclass_from_json(load(kclass, "--kclass"));
        out.rational(euler_characteristic(k));
        return 0;
      };
    });
  }
  {
    auto* s = add("mu", "Image of a kernel under mu");
    s->add_option("--kernel", kernel_e, "KKernel JSON")->required();
    s->callback([&] {
      action = [&] {
        out.correspondence(mu(cj::kernel_from_json(load(kernel_e, "--kernel"))));
        return 0;
      };
    });
  }
  {
    auto* s = add("k-compose", "Compose kernels: F o E");
    s->add_option("--e", kernel_e, "KKernel X -> Y")->required();
    s->add_option("--f", kernel_f, "KKernel Y -> Z")->required();
    s->callback([&] {
      action = [&] {
        const KKernel r =
            k_compose(cj::kernel_from_json(load(kernel_e, "--e")), cj::kernel_from_json(load(kernel_f, "--f")));
        out.raw(cj::to_json(r), to_string(r.ch()) + "\n");
        return 0;
      };
    });
  }
  {
    auto* s = add("identity-kernel", "Chern character of the structure sheaf of the diagonal");
    s->add_option("--variety", variety, "Variety")->required();
    s->callback([&] {
      action = [&] {
        const KKernel r = identity_kernel(load_variety(variety));
        out.raw(cj::to_json(r), to_string(r.ch()) + "\n");
        return 0;
      };
    });
  }
  {
    auto* s = add("motive", "Motive of X, or operations on a motive");
    s->add_option("--variety", variety, "Variety");
    s->add_option("--twist", twist, "Twist r for the motive of --variety");
    s->add_option("--motive", motive, "Motive JSON");
    s->add_option("--tate-twist", tate, "Apply the i-th Tate twist");
    s->add_flag("--dual", want_dual, "Take the dual");
    s->callback([&] {
      action = [&] {
        Motive m;
        if (!motive.empty()) {
          m = cj::motive_from_json(load(motive, "--motive"));
        } else if (!variety.empty()) {
          const Motive base = motive_of(load_variety(variety));
          m = Motive(base.variety(), twist, base.idempotent());
        } else {
          throw invalid_input("motive: need --variety or --motive");
        }
        if (tate != 0) m = tate_twist(m, tate);
        if (want_dual) m = dual(m);
        out.raw(cj::to_json(m), m.name() + "\n");
        return 0;
      };
    });
  }
  {
    auto* s = add("split", "Split an idempotent endomorphism of a motive");
    s->add_option("--motive", motive, "Motive JSON")->required();
    s->add_option("--projector", projector, "Correspondence p: X -> X")->required();
    s->callback([&] {
      action = [&] {
        const Motive m = cj::motive_from_json(load(motive, "--motive"));
        const auto p = cj::correspondence_from_json(load(projector, "--projector"));
        const Splitting sp = split_idempotent(m, MotiveMorphism(m, m, p));
        const Json j = {{"image", cj::to_json(sp.image)},
                        {"section", cj::to_json(sp.section)},
                        {"retraction", cj::to_json(sp.retraction)}};
        out.raw(j, "image " + sp.image.name() + "\nsection " + to_string(sp.section.corr().cycle()) +
                       "\nretraction " + to_string(sp.retraction.corr().cycle()) + "\n");
        return 0;
      };
    });
  }
  {
    auto* s = add("orbit-compose", "Compose morphisms in the orbit category: g o f");
    s->add_option("--f", corr_f, "OrbitMorphism JSON")->required();
    s->add_option("--g", corr_g, "OrbitMorphism JSON")->required();
    s->callback([&] {
      action = [&] {
        const OrbitMorphism r =
            orbit_compose(cj::orbit_from_json(load(corr_f, "--f")), cj::orbit_from_json(load(corr_g, "--g")));
        std::ostringstream os;
        for (const auto& [i, c] : r.components()) os << "[" << i << "] " << to_string(c.cycle()) << "\n";
        if (r.components().empty()) os << "0\n";
        out.raw(cj::to_json(r), os.str());
        return 0;
      };
    });
  }
  {
    auto* s = add("orlov", "Decide whether mutually inverse kernels give an isomorphism of motives");
    s->add_option("--e", kernel_e, "KKernel X -> Y");
    s->add_option("--f", kernel_f, "KKernel Y -> X");
    s->add_option("--twisted-diagonal", orlov_twist,
                  "Use O_Delta(d,0) on P1 and its transported inverse instead of --e/--f")
        ->each([&](const std::string&) { orlov_twist_set = true; });
    s->add_flag("--tate-shift", tate_shift, "Compose both kernels with a degree-mixing involution");
    s->callback([&] {
      action = [&] {
        KKernel e;
        KKernel f;
        if (orlov_twist_set) {
          e = twisted_identity_kernel(Variety::projective_space(1), {orlov_twist});
          f = transported_inverse(e);
        } else {
          if (kernel_e.empty() || kernel_f.empty()) throw invalid_input("orlov: need --e and --f");
          e = cj::kernel_from_json(load(kernel_e, "--e"));
          f = cj::kernel_from_json(load(kernel_f, "--f"));
        }
        if (tate_shift) std::tie(e, f) = tate_shifted_pair(e, f);
        const OrlovResult r = orlov_pipeline(e, f);
        Json j = {{"verdict", to_string(r.verdict)},
                  {"dimension", r.dimension},
                  {"mutually_inverse", r.mutually_inverse},
                  {"forward", cj::to_json(r.forward)},
                  {"backward", cj::to_json(r.backward)}};
        auto floor_json = [](int v) { return v == no_support ? Json(nullptr) : Json(v); };
        j["forward_support_floor"] = floor_json(r.forward_support_floor);
        j["backward_support_floor"] = floor_json(r.backward_support_floor);
        std::ostringstream os;
        os << to_string(r.verdict) << "\n";
        os << "mu(E) = " << to_string(r.forward.cycle()) << "\nmu(F) = " << to_string(r.backward.cycle()) << "\n";
        if (r.forward_degree_zero) {
          j["forward_degree_zero"] = cj::to_json(*r.forward_degree_zero);
          j["backward_degree_zero"] = cj::to_json(*r.backward_degree_zero);
          os << "f0 = " << to_string(r.forward_degree_zero->corr().cycle()) << "\ng0 = "
             << to_string(r.backward_degree_zero->corr().cycle()) << "\n";
        }
        out.raw(j, os.str());
        return 0;
      };
    });
  }
  {
    auto* s = add("compat", "Compare the motive and K-theory routes for a kernel");
    s->add_option("--kernel", kernel_e, "KKernel JSON")->required();
    s->add_flag("--omit-sqrt-todd", omit_sqrt_todd, "Corrupt the K-theory route (negative control)");
    s->callback([&] {
      action = [&] {
        const bool ok = compatibility_check(cj::kernel_from_json(load(kernel_e, "--kernel")),
                                            omit_sqrt_todd ? CompatPath::omit_sqrt_todd : CompatPath::faithful);
        out.raw(Json{{"compatible", ok}}, ok ? "true\n" : "false\n");
        return 0;
      };
    });
  }
  {
    auto* s = add("verify", "Run the acceptance criteria and module invariants");
    s->add_option("--seed", seed, "Random seed");
    s->add_option("--samples", samples, "Random instances per check (minimums still apply)")
        ->check(CLI::Range(1, 1000000));
    s->callback([&] {
      action = [&] {
        const verify::Options o{seed, samples};
        const auto golden = cj::parse_text(std::string(golden::char_class_expansions));
        const auto acc = verify::acceptance_suite(o, golden);
        const auto inv = verify::invariant_suite(o);
        bool all = true;
        const std::string text = "acceptance criteria\n" + check_table(acc, all) + "module invariants\n" +
                                 check_table(inv, all) + (all ? "all checks passed\n" : "SOME CHECKS FAILED\n");
        const Json j = {{"seed", seed},
                        {"samples", samples},
                        {"acceptance", check_json(acc)},
                        {"invariants", check_json(inv)},
                        {"all_passed", all}};
        out.raw(j, text);
        return all ? 0 : 1;
      };
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  out.format = format == "json" ? Format::json_out : Format::text;
  try {
    return action ? action() : 2;
  } catch (const chowmot::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
