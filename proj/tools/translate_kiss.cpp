// translate-kiss: build, verify and draw the touching-translates construction.
//
// Exit codes: 0 success/PASS, 1 verification FAIL, 2 usage or parameter
// error, 3 I/O error.

#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "tkiss/json_io.hpp"
#include "tkiss/ruler.hpp"
#include "tkiss/svg.hpp"
#include "tkiss/verifier.hpp"

namespace {

using tkiss::Int;

enum ExitCode : int { kOk = 0, kFail = 1, kUsage = 2, kIo = 3 };

struct Globals {
  std::string out;
  bool quiet = false;
};

// Writes the main artifact of a command to --out, or stdout.
void emit(const Globals& g, const std::string& bytes) {
  if (g.out.empty() || g.out == "-") {
    std::cout << bytes;
    std::cout.flush();
  } else {
    tkiss::write_file(g.out, bytes);
  }
}

void say(const Globals& g, const std::string& line) {
  if (!g.quiet) {
    std::cout << line << '\n';
  }
}

std::string format_contact(const tkiss::ContactComponent& c) {
  std::ostringstream s;
  s << tkiss::to_string(c.kind) << " (" << c.a.x << ',' << c.a.y << ")";
  if (c.kind != tkiss::ContactKind::point) {
    s << "-(" << c.b.x << ',' << c.b.y << ")";
  }
  return s.str();
}

int run_build(const Globals& g, Int m, Int n) {
  emit(g, tkiss::serialize(tkiss::make_shape_document(tkiss::build_disk(m, n))));
  return kOk;
}

int run_verify(const Globals& g, Int m, Int n, const std::string& json_path, unsigned threads) {
  const tkiss::Scene scene = tkiss::place_translates(m, n);
  const tkiss::Certificate cert = tkiss::verify_scene(scene, {threads});
  if (!json_path.empty()) {
    tkiss::write_file(json_path, tkiss::serialize(tkiss::make_certificate_document(scene, cert)));
  }

  std::ostringstream report;
  Int overlapping = 0;
  for (const auto& v : cert.pair_verdicts) {
    if (!v.interiors_disjoint) {
      ++overlapping;
      report << "  overlap: A_" << v.i << " and A_" << v.j << '\n';
    } else if (v.i == 0 && !g.quiet) {
      report << "  A_0 ~ A_" << v.j << ": contact length " << v.segment_length_total;
      for (const auto& c : v.contacts) {
        report << "; " << format_contact(c);
      }
      report << '\n';
    }
  }
  std::ostringstream summary;
  summary << (cert.ok ? "PASS" : "FAIL") << " m=" << m << " n=" << n << ": " << cert.n + 1
          << " translates, " << cert.pair_verdicts.size() - static_cast<std::size_t>(overlapping) << "/"
          << cert.pair_verdicts.size() << " pairs interior-disjoint, A_0 touched by " << cert.touching_count
          << "/" << cert.n;
  std::string text = summary.str() + "\n" + report.str();
  // FAIL details are printed even with --quiet.
  if (!g.quiet || !cert.ok) {
    emit(g, text);
  }
  return cert.ok ? kOk : kFail;
}

int run_render(const Globals& g, Int m, Int n, bool shape_only, Int unit_px) {
  if (shape_only) {
    emit(g, tkiss::render_svg(tkiss::build_disk(m, n), unit_px));
  } else {
    emit(g, tkiss::render_svg(tkiss::place_translates(m, n), unit_px));
  }
  return kOk;
}

int run_lemma1(const Globals& g, Int k_max, Int r_max) {
  const tkiss::PrefixTable table(r_max);
  if (const auto bad = tkiss::find_lemma1_violation(k_max, r_max, table)) {
    std::cout << "FAIL lemma1: window k=" << bad->k << " r=" << bad->r << " has sum "
              << table.window(bad->r, bad->k) << " < prefix sum " << table.sum(bad->k) << '\n';
    return kFail;
  }
  say(g, "PASS lemma1: every window with k <= " + std::to_string(k_max) + " and r+k-1 <= " +
             std::to_string(r_max) + " sums to at least the prefix sum");
  return kOk;
}

int run_lemma2(const Globals& g, Int m, Int n, bool exhaustive) {
  if (exhaustive) {
    if (const auto bad = tkiss::find_lemma2_violation(m, n)) {
      std::cout << "FAIL lemma2: m=" << m << " n=" << n << " r=" << bad->r << " xstar=" << bad->xstar
                << " ystar=" << bad->ystar << " overlaps\n";
      return kFail;
    }
    say(g, "PASS lemma2: m=" + std::to_string(m) + " n=" + std::to_string(n) + ", " +
               std::to_string(tkiss::lemma2_case_count(m, n)) + " cases interior-disjoint");
    return kOk;
  }
  // Without --exhaustive only the tightest vertical shift is checked.
  const tkiss::Shape shape = tkiss::build_disk(m, n);
  const auto base = shape.rects();
  Int cases = 0;
  for (Int r = 1; r <= shape.bar_count(); ++r) {
    for (Int xstar = 1; xstar <= m - 1; ++xstar) {
      const tkiss::Lemma2Case c{m, n, r, xstar, 1};
      if (!tkiss::union_interiors_disjoint(base, shape.rects(tkiss::lemma2_offset(c)))) {
        std::cout << "FAIL lemma2: m=" << m << " n=" << n << " r=" << r << " xstar=" << xstar
                  << " ystar=1 overlaps\n";
        return kFail;
      }
      ++cases;
    }
  }
  say(g, "PASS lemma2: m=" + std::to_string(m) + " n=" + std::to_string(n) + ", " + std::to_string(cases) +
             " cases with ystar=1 interior-disjoint (use --exhaustive for all ystar)");
  return kOk;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Construct and verify n+1 translates of a rectilinear disk with pairwise disjoint "
               "interiors where A_0 touches every other translate.",
               "translate-kiss"};
  app.require_subcommand(1);

  Globals g;
  app.add_option("--out", g.out, "Output file for the command's main artifact (default: stdout)");
  app.add_flag("--quiet", g.quiet, "Only print failures");

  Int m = 0;
  Int n = 0;
  auto add_mn = [&](CLI::App* sub) {
    sub->add_option("-m", m, "Bar width m")->required();
    sub->add_option("-n", n, "Depth n")->required();
    sub->fallthrough();
  };

  auto* build = app.add_subcommand("build", "Write the disk D_n^m as JSON");
  add_mn(build);

  auto* verify = app.add_subcommand("verify", "Verify the n+1 translates and print PASS/FAIL");
  add_mn(verify);
  std::string json_path;
  unsigned threads = 1;
  verify->add_option("--json", json_path, "Write the full certificate to this path");
  verify->add_option("--threads", threads, "Worker threads for pair checks")->check(CLI::Range(1u, 256u));

  auto* render = app.add_subcommand("render", "Draw the scene or a single disk as SVG");
  add_mn(render);
  bool scene_flag = false;
  bool shape_flag = false;
  Int unit_px = tkiss::kDefaultUnitPx;
  auto* scene_opt = render->add_flag("--scene", scene_flag, "Draw all translates (default)");
  render->add_flag("--shape", shape_flag, "Draw only D_n^m")->excludes(scene_opt);
  render->add_option("--unit-px", unit_px, "Pixels per unit length");

  auto* lemma1 = app.add_subcommand("lemma1", "Check that every prefix of the ruler sequence has the smallest window sum");
  Int k_max = 0;
  Int r_max = 0;
  lemma1->add_option("--k-max", k_max, "Largest window length")->required();
  lemma1->add_option("--r-max", r_max, "Largest window end index")->required();
  lemma1->fallthrough();

  auto* lemma2 = app.add_subcommand("lemma2", "Check that shifted translates of D_n^m never overlap");
  add_mn(lemma2);
  bool exhaustive = false;
  lemma2->add_flag("--exhaustive", exhaustive, "Check every ystar up to the disk height + 1");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (build->parsed()) {
      return run_build(g, m, n);
    }
    if (verify->parsed()) {
      return run_verify(g, m, n, json_path, threads);
    }
    if (render->parsed()) {
      return run_render(g, m, n, shape_flag, unit_px);
    }
    if (lemma1->parsed()) {
      return run_lemma1(g, k_max, r_max);
    }
    if (lemma2->parsed()) {
      return run_lemma2(g, m, n, exhaustive);
    }
  } catch (const tkiss::IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kIo;
  } catch (const tkiss::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::bad_alloc&) {
    std::cerr << "error: out of memory\n";
    return kUsage;
  }
  return kUsage;
}
