#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "thin4/json_io.hpp"
#include "thin4/version.hpp"

namespace {

using thin4::json;
using thin4::Report;

// '-' reads standard input; a leading '{' or '[' is inline JSON; anything
// else is a file path.
json load_json_arg(const std::string& arg) {
  std::string text;
  if (arg == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    text = os.str();
  } else if (!arg.empty() && (arg[0] == '{' || arg[0] == '[')) {
    text = arg;
  } else {
    std::ifstream in(arg);
    if (!in) throw thin4::schema_error("cannot open " + arg);
    std::ostringstream os;
    os << in.rdbuf();
    text = os.str();
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw thin4::schema_error(std::string("invalid JSON: ") + e.what());
  }
}

// Reports wrap their subject under payload.<key>; accept both bare objects
// and previous command output so that generators pipe into verifiers.
json unwrap(const json& j, const char* key) {
  if (j.is_object() && j.contains("payload") && j.at("payload").is_object() &&
      j.at("payload").contains(key))
    return j.at("payload").at(key);
  return j;
}

json kirby_invariants_payload(const thin4::KirbyDiagram& d,
                              std::vector<std::string>& warnings) {
  json payload{{"euler_characteristic", thin4::euler_characteristic(d)}};
  if (d.zero_handles == 1 && d.three_handles == 0 && d.four_handles == 0) {
    thin4::HandlebodyHomology h = thin4::homology_of_2handlebody(d);
    payload["homology"] = json{{"h0", thin4::to_json(h.h0)},
                               {"h1", thin4::to_json(h.h1)},
                               {"h2", thin4::to_json(h.h2)}};
  } else {
    warnings.push_back("homology skipped: not a 2-handlebody");
  }
  if (d.one_handles.empty() && d.three_handles == 0 && d.four_handles == 0) {
    payload["boundary_first_homology"] =
        thin4::to_json(thin4::boundary_first_homology(d));
  } else {
    warnings.push_back(
        "boundary_first_homology skipped: needs a 1-handle-free trace of "
        "surgery");
  }
  if (d.one_handles.empty()) {
    thin4::IntersectionForm f = thin4::intersection_form(d);
    payload["intersection_form"] =
        json{{"matrix", thin4::to_json(f.matrix)},
             {"signature", f.signature},
             {"determinant", thin4::json_from_mpz(f.det)},
             {"even", f.even}};
  } else {
    warnings.push_back("intersection_form skipped: diagram has 1-handles");
  }
  return payload;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"thin4: width, Kirby, trisection and bridge-tangle "
               "calculations for 4-manifold handle decompositions"};
  app.set_version_flag("--version", THIN4_VERSION);
  app.require_subcommand(1);
  std::string format = "json";
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"json", "text"}));

  std::function<Report()> action;

  // ---- width ----
  auto* width = app.add_subcommand("width", "width multisets and profiles");
  width->require_subcommand(1);
  {
    static std::string a, b;
    auto* cmd = width->add_subcommand("compare", "order two width multisets");
    cmd->add_option("a", a, "multiset JSON")->required();
    cmd->add_option("b", b, "multiset JSON")->required();
    cmd->callback([&] {
      action = [&]() -> Report {
        auto wa = thin4::width_multiset_from_json(load_json_arg(a));
        auto wb = thin4::width_multiset_from_json(load_json_arg(b));
        Report r;
        r.payload = json{{"ordering", thin4::to_string(thin4::compare(wa, wb))}};
        return r;
      };
    });
  }
  {
    static std::string in;
    auto* cmd = width->add_subcommand("compute", "width of a profile");
    cmd->add_option("profile", in, "profile JSON")->required();
    cmd->callback([&] {
      action = [&] {
        return thin4::width_compute_report(
            thin4::profile_from_json(unwrap(load_json_arg(in), "profile")));
      };
    });
  }
  {
    static std::string in;
    auto* cmd = width->add_subcommand("reverse", "upside-down profile");
    cmd->add_option("profile", in, "profile JSON")->required();
    cmd->callback([&] {
      action = [&]() -> Report {
        auto p = thin4::profile_from_json(unwrap(load_json_arg(in), "profile"));
        auto rev = thin4::reversed(p);
        Report r;
        r.payload = json{{"profile", thin4::to_json(rev)},
                         {"width", thin4::to_json(thin4::width_of(rev))}};
        return r;
      };
    });
  }
  {
    static std::string m, n;
    auto* cmd = width->add_subcommand(
        "concat", "profile of a union: left followed by reversed right");
    cmd->add_option("left", m, "profile JSON")->required();
    cmd->add_option("right", n, "profile JSON")->required();
    cmd->callback([&] {
      action = [&]() -> Report {
        auto pm = thin4::profile_from_json(unwrap(load_json_arg(m), "profile"));
        auto pn = thin4::profile_from_json(unwrap(load_json_arg(n), "profile"));
        auto cat = thin4::concat_with_reversed(pm, pn);
        Report r;
        r.payload = json{{"profile", thin4::to_json(cat)},
                         {"width", thin4::to_json(thin4::width_of(cat))}};
        return r;
      };
    });
  }

  // ---- kirby ----
  auto* kirby = app.add_subcommand("kirby", "algebraic Kirby diagrams");
  kirby->require_subcommand(1);
  auto* kirby_gen = kirby->add_subcommand("gen", "diagram generators");
  kirby_gen->require_subcommand(1);
  {
    static std::vector<long long> framings;
    auto* cmd = kirby_gen->add_subcommand("plumbing",
                                          "linear plumbing of disk bundles");
    cmd->add_option("--framings", framings, "comma-separated framings")
        ->required()
        ->delimiter(',');
    cmd->callback([&] {
      action = [&]() -> Report {
        Report r;
        r.payload = json{{"diagram", thin4::to_json(thin4::linear_plumbing(
                                         framings))}};
        return r;
      };
    });
  }
  {
    static long long g = 1, n = 0;
    static bool nonorientable = false;
    auto* cmd =
        kirby_gen->add_subcommand("bundle", "disk bundle over a surface");
    cmd->add_option("--g", g, "surface genus (>= 1)");
    cmd->add_option("--n", n, "euler number");
    cmd->add_flag("--nonorientable", nonorientable);
    cmd->callback([&] {
      action = [&]() -> Report {
        Report r;
        r.payload = json{{"diagram", thin4::to_json(thin4::disk_bundle(
                                         !nonorientable, g, n))}};
        return r;
      };
    });
  }
  {
    static std::string in;
    auto* cmd = kirby->add_subcommand("double", "double along the boundary");
    cmd->add_option("diagram", in, "diagram JSON")->required();
    cmd->callback([&] {
      action = [&]() -> Report {
        auto d = thin4::kirby_from_json(unwrap(load_json_arg(in), "diagram"));
        Report r;
        r.payload = json{{"diagram", thin4::to_json(thin4::doubled(d))}};
        return r;
      };
    });
  }
  {
    static std::string in;
    auto* cmd = kirby->add_subcommand(
        "invariants", "euler characteristic, homology, intersection form");
    cmd->add_option("diagram", in, "diagram JSON")->required();
    cmd->callback([&] {
      action = [&]() -> Report {
        auto d = thin4::kirby_from_json(unwrap(load_json_arg(in), "diagram"));
        Report r;
        r.payload = kirby_invariants_payload(d, r.warnings);
        return r;
      };
    });
  }

  // ---- tri ----
  auto* tri = app.add_subcommand("tri", "trisection diagrams");
  tri->require_subcommand(1);
  {
    static std::string name;
    static long long g = 1, n = 0;
    static bool nonorientable = false;
    auto* cmd = tri->add_subcommand("gen", "diagram generators");
    cmd->add_option("name", name, "s4 | s1xs3 | cp2 | cp2bar | bundle-double")
        ->required()
        ->check(CLI::IsMember({"s4", "s1xs3", "cp2", "cp2bar", "bundle-double"}));
    cmd->add_option("--g", g, "surface genus (bundle-double)");
    cmd->add_option("--n", n, "euler number (bundle-double)");
    cmd->add_flag("--nonorientable", nonorientable);
    cmd->callback([&] {
      action = [&]() -> Report {
        thin4::TrisectionDiagram d;
        if (name == "s4")
          d = thin4::s4_diagram();
        else if (name == "s1xs3")
          d = thin4::s1xs3_diagram();
        else if (name == "cp2")
          d = thin4::cp2_diagram(true);
        else if (name == "cp2bar")
          d = thin4::cp2_diagram(false);
        else
          d = thin4::sphere_bundle_double_diagram(!nonorientable, g, n);
        Report r;
        r.payload = json{{"diagram", thin4::to_json(d)}};
        return r;
      };
    });
  }
  {
    static std::string in;
    auto* cmd = tri->add_subcommand("verify", "validate a trisection diagram");
    cmd->add_option("diagram", in, "diagram JSON")->required();
    cmd->callback([&] {
      action = [&] {
        return thin4::trisection_verify_report(
            thin4::trisection_from_json(unwrap(load_json_arg(in), "diagram")));
      };
    });
  }
  {
    static std::string in, matrix;
    static long long p = 2;
    auto* cmd = tri->add_subcommand(
        "symmetry", "necessary conditions for a period-p symmetry");
    cmd->add_option("diagram", in, "diagram JSON")->required();
    cmd->add_option("--matrix", matrix, "2g x 2g action on H1, JSON")
        ->required();
    cmd->add_option("--p", p, "period (>= 2)");
    cmd->callback([&] {
      action = [&]() -> Report {
        auto d =
            thin4::trisection_from_json(unwrap(load_json_arg(in), "diagram"));
        auto m = thin4::matrix_from_json(load_json_arg(matrix));
        thin4::SymmetryReport sr = thin4::check_symmetry_action(d, m, p);
        Report r;
        r.payload = json{{"ok", sr.ok},
                         {"necessary_conditions_only", sr.necessary_only},
                         {"diagnostics", sr.diagnostics}};
        r.warnings.push_back(
            "homology-level necessary conditions only; ok does not certify a "
            "symmetric diagram");
        if (!sr.ok) {
          r.status = "invalid";
          r.error = sr.diagnostics.front();
        }
        return r;
      };
    });
  }

  // ---- bridge ----
  auto* bridge = app.add_subcommand("bridge", "bridge-trisection tangles");
  bridge->require_subcommand(1);
  {
    static std::string in;
    auto* cmd = bridge->add_subcommand(
        "band", "banded link of the quotient tangle data");
    cmd->add_option("tangles", in, "bridge trisection JSON")->required();
    cmd->callback([&] {
      action = [&]() -> Report {
        auto bt = thin4::bridge_from_json(unwrap(load_json_arg(in), "tangles"));
        auto bd = thin4::banded_link(bt);
        Report r;
        r.payload =
            json{{"banded", thin4::to_json(bd)},
                 {"components", thin4::components_of_union(bt.theta_alpha,
                                                           bt.theta_gamma)}};
        return r;
      };
    });
  }
  {
    static std::string in;
    auto* cmd = bridge->add_subcommand(
        "euler", "branch surface and boundary-link counts");
    cmd->add_option("tangles", in, "bridge trisection JSON")->required();
    cmd->callback([&] {
      action = [&]() -> Report {
        auto bt = thin4::bridge_from_json(unwrap(load_json_arg(in), "tangles"));
        thin4::BoundaryLinks bl = thin4::boundary_links(bt);
        Report r;
        r.payload =
            json{{"branch_surface_euler", thin4::branch_surface_euler(bt)},
                 {"components", thin4::components_of_union(bt.theta_alpha,
                                                           bt.theta_gamma)},
                 {"boundary_links",
                  json{{"at_zero", bl.at_zero}, {"at_one", bl.at_one}}}};
        return r;
      };
    });
  }

  // let --format appear after the subcommand too
  std::function<void(CLI::App*)> allow_fallthrough = [&](CLI::App* a) {
    for (CLI::App* sub : a->get_subcommands(nullptr)) {
      sub->fallthrough();
      allow_fallthrough(sub);
    }
  };
  allow_fallthrough(&app);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help, --version
    app.exit(e);
    return 2;
  }

  Report report;
  int code = 0;
  try {
    report = action();
    code = report.status == "ok" ? 0 : 1;
  } catch (const thin4::schema_error& e) {
    report.status = "error";
    report.error = e.what();
    code = 2;
  } catch (const std::invalid_argument& e) {
    report.status = "invalid";
    report.error = e.what();
    code = 1;
  }
  std::cout << report.render(format);
  return code;
}
