#include "cli_app.hpp"

#include <CLI11.hpp>
#include <functional>
#include <iostream>
#include <sstream>

#include "monodromy/io.hpp"

namespace monodromy::cli {

namespace {

using monodromy::io::write_abelian;
using monodromy::io::write_curves;
using monodromy::io::write_factorization;
using monodromy::io::write_presentation;

void echo_factorization(std::ostream& out, const Factorization& f, const char* header = "# input") {
  out << header << "\n" << write_factorization(f);
}

FinitePermGroup target_group(const std::string& name) {
  if (name == "s3") return FinitePermGroup::symmetric(3);
  if (name == "s4") return FinitePermGroup::symmetric(4);
  if (name == "s5") return FinitePermGroup::symmetric(5);
  throw std::runtime_error("unknown target group '" + name + "' (expected s3, s4 or s5)");
}

std::vector<LocalCurve> load_curves(const std::string& path, std::ostream& out,
                                    std::ostream& err) {
  auto curves = io::read_curves_file(path);
  out << "# input\n" << write_curves(curves);
  for (const auto& c : curves)
    for (const auto& w : validate(c)) err << "warning: " << w << "\n";
  return curves;
}

void print_braid_result(std::ostream& out, const BraidWord& b) {
  out << "# result\n";
  out << "strands: " << b.strands << "\n";
  out << "word: " << io::format_int_word(b.letters) << "\n";
  out << "exponent_sum: " << exponent_sum(b) << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"braid monodromy toolkit"};
  app.require_subcommand(1);
  std::function<void()> action;

  // verify
  {
    auto* cmd = app.add_subcommand("verify", "check projectivity of a factorization");
    auto file = std::make_shared<std::string>();
    cmd->add_option("file", *file, "factorization file")->required();
    cmd->callback([&action, &out, file]() {
      action = [file, &out]() {
        Factorization f = io::read_factorization_file(*file);
        echo_factorization(out, f);
        out << "# result\n";
        out << "strands: " << f.strands << "\n";
        out << "factors: " << f.size() << "\n";
        out << "projective: " << (is_projective(f) ? "true" : "false") << "\n";
      };
    });
  }

  // group
  {
    auto* cmd = app.add_subcommand("group", "Zariski-van Kampen presentation");
    auto file = std::make_shared<std::string>();
    auto projective = std::make_shared<bool>(false);
    auto affine = std::make_shared<bool>(false);
    auto simplify = std::make_shared<bool>(false);
    cmd->add_option("file", *file, "factorization file")->required();
    cmd->add_flag("--projective", *projective, "presentation of the projective complement");
    cmd->add_flag("--affine", *affine, "presentation of the affine complement (default)");
    cmd->add_flag("--simplify", *simplify, "apply Tietze simplification");
    cmd->callback([&action, &out, &err, file, projective, affine, simplify]() {
      action = [file, projective, affine, simplify, &out, &err]() {
        if (*projective && *affine)
          throw std::runtime_error("choose one of --affine / --projective");
        Factorization f = io::read_factorization_file(*file);
        echo_factorization(out, f);
        Presentation p;
        if (*projective) {
          if (!is_projective(f))
            err << "warning: factorization is not projective; the relator mu_1...mu_n is "
                   "imposed anyway\n";
          p = zvk_projective(f);
        } else {
          p = zvk_affine(f);
        }
        std::string kind = *projective ? "projective" : "affine";
        if (*simplify) {
          p = tietze_simplify(p);
          kind += ", simplified";
        }
        out << "# presentation (" << kind << ")\n" << write_presentation(p);
        out << "# abelianization\n" << write_abelian(abelianize(p)) << "\n";
      };
    });
  }

  // abelianize
  {
    auto* cmd = app.add_subcommand("abelianize", "abelian invariants of the ZvK group");
    auto file = std::make_shared<std::string>();
    auto projective = std::make_shared<bool>(false);
    cmd->add_option("file", *file, "factorization file")->required();
    cmd->add_flag("--projective", *projective, "use the projective group");
    cmd->callback([&action, &out, file, projective]() {
      action = [file, projective, &out]() {
        Factorization f = io::read_factorization_file(*file);
        echo_factorization(out, f);
        Presentation p = *projective ? zvk_projective(f) : zvk_affine(f);
        out << "# abelianization (" << (*projective ? "projective" : "affine") << ")\n"
            << write_abelian(abelianize(p)) << "\n";
      };
    });
  }

  // homcount
  {
    auto* cmd = app.add_subcommand("homcount", "count homomorphisms into a finite group");
    auto file = std::make_shared<std::string>();
    auto into = std::make_shared<std::string>();
    auto nonabelian = std::make_shared<bool>(false);
    auto projective = std::make_shared<bool>(false);
    cmd->add_option("file", *file, "factorization file")->required();
    cmd->add_option("--into", *into, "target group: s3, s4 or s5")->required();
    cmd->add_flag("--nonabelian", *nonabelian, "count only maps with nonabelian image");
    cmd->add_flag("--projective", *projective, "use the projective group");
    cmd->callback([&action, &out, file, into, nonabelian, projective]() {
      action = [file, into, nonabelian, projective, &out]() {
        Factorization f = io::read_factorization_file(*file);
        echo_factorization(out, f);
        Presentation p = *projective ? zvk_projective(f) : zvk_affine(f);
        long long count = count_homs(p, target_group(*into), *nonabelian, 0);
        out << "# result\n";
        out << "target: " << *into << "\n";
        out << "nonabelian_only: " << (*nonabelian ? "true" : "false") << "\n";
        out << "homs: " << count << "\n";
      };
    });
  }

  // hurwitz-orbit
  {
    auto* cmd = app.add_subcommand("hurwitz-orbit", "enumerate the bounded Hurwitz orbit");
    auto file = std::make_shared<std::string>();
    auto max_states = std::make_shared<std::size_t>(10000);
    cmd->add_option("file", *file, "factorization file")->required();
    cmd->add_option("--max", *max_states, "state budget");
    cmd->callback([&action, &out, file, max_states]() {
      action = [file, max_states, &out]() {
        Factorization f = io::read_factorization_file(*file);
        echo_factorization(out, f);
        HurwitzOrbit orbit = hurwitz_orbit(f, *max_states);
        out << "# result\n";
        out << "orbit_size: " << orbit.states.size() << "\n";
        out << "complete: " << (orbit.complete ? "true" : "false") << "\n";
      };
    });
  }

  // distinguish
  {
    auto* cmd = app.add_subcommand("distinguish", "bounded Hurwitz-equivalence test");
    auto file_a = std::make_shared<std::string>();
    auto file_b = std::make_shared<std::string>();
    auto max_states = std::make_shared<std::size_t>(2000);
    auto conj_len = std::make_shared<int>(3);
    cmd->add_option("fileA", *file_a, "first factorization file")->required();
    cmd->add_option("fileB", *file_b, "second factorization file")->required();
    cmd->add_option("--max", *max_states, "orbit state budget");
    cmd->add_option("--conj-len", *conj_len, "global conjugator length bound");
    cmd->callback([&action, &out, file_a, file_b, max_states, conj_len]() {
      action = [file_a, file_b, max_states, conj_len, &out]() {
        Factorization a = io::read_factorization_file(*file_a);
        Factorization b = io::read_factorization_file(*file_b);
        echo_factorization(out, a, "# input A");
        echo_factorization(out, b, "# input B");
        SameOrbitResult res = same_orbit(a, b, *max_states, *conj_len);
        out << "# result\n";
        out << "relation: " << to_string(res.relation) << "\n";
        out << "reason: " << res.reason << "\n";
      };
    });
  }

  // local-braid
  {
    auto* cmd = app.add_subcommand("local-braid", "track the local braid of a curve germ");
    auto file = std::make_shared<std::string>();
    auto cfg = std::make_shared<TrackerConfig>();
    cfg->samples = 2000;
    cmd->add_option("file", *file, "curve file")->required();
    cmd->add_option("--radius", cfg->radius, "base circle radius");
    cmd->add_option("--samples", cfg->samples, "samples per revolution");
    cmd->add_option("--tolerance", cfg->tolerance, "coincidence tolerance");
    cmd->callback([&action, &out, &err, file, cfg]() {
      action = [file, cfg, &out, &err]() {
        auto curves = load_curves(*file, out, err);
        if (curves.size() != 1)
          throw std::runtime_error("local-braid expects exactly one curve in the file");
        print_braid_result(out, local_braid(curves[0], *cfg));
      };
    });
  }

  // semilocal
  {
    auto* cmd = app.add_subcommand("semilocal", "assemble local braids along a vertical line");
    auto file = std::make_shared<std::string>();
    auto cfg = std::make_shared<TrackerConfig>();
    cfg->samples = 2000;
    cmd->add_option("file", *file, "curve file (one curve per center)")->required();
    cmd->add_option("--radius", cfg->radius, "base circle radius");
    cmd->add_option("--samples", cfg->samples, "samples per revolution");
    cmd->add_option("--tolerance", cfg->tolerance, "coincidence tolerance");
    cmd->callback([&action, &out, &err, file, cfg]() {
      action = [file, cfg, &out, &err]() {
        auto curves = load_curves(*file, out, err);
        print_braid_result(out, semilocal_braid(curves, *cfg));
      };
    });
  }

  // act
  {
    auto* cmd = app.add_subcommand("act", "apply a braid to a free word");
    auto strands = std::make_shared<int>(0);
    auto braid_text = std::make_shared<std::string>();
    auto word_text = std::make_shared<std::string>();
    cmd->add_option("--strands", *strands, "strand count / free rank")->required();
    cmd->add_option("--braid", *braid_text, "braid word, e.g. '1 -2 1'")->required();
    cmd->add_option("--word", *word_text, "free word")->required();
    cmd->callback([&action, &out, strands, braid_text, word_text]() {
      action = [strands, braid_text, word_text, &out]() {
        BraidWord t(*strands, io::parse_int_word(*braid_text));
        FreeWord w(*strands, io::parse_int_word(*word_text));
        out << "# input\n";
        out << "strands: " << *strands << "\n";
        out << "braid: " << io::format_int_word(t.letters) << "\n";
        out << "word: " << io::format_int_word(w.letters) << "\n";
        out << "# result\n";
        out << "image: " << io::format_int_word(act(w, t).letters) << "\n";
      };
    });
  }

  // embed
  {
    auto* cmd = app.add_subcommand("embed", "block-embed braids on disjoint strand ranges");
    auto parts_text = std::make_shared<std::vector<std::string>>();
    cmd->add_option("--part", *parts_text, "braid as '<strands>:<letters>', repeatable")
        ->required();
    cmd->callback([&action, &out, parts_text]() {
      action = [parts_text, &out]() {
        std::vector<BraidWord> parts;
        out << "# input\n";
        for (const auto& text : *parts_text) {
          auto colon = text.find(':');
          if (colon == std::string::npos)
            throw std::runtime_error("part must look like '<strands>:<letters>'");
          int n = std::stoi(text.substr(0, colon));
          BraidWord part(n, io::parse_int_word(text.substr(colon + 1)));
          out << "part " << n << ":" << (part.letters.empty() ? "" : " ")
              << io::format_int_word(part.letters) << "\n";
          parts.push_back(std::move(part));
        }
        BraidWord embedded = block_embed(parts);
        out << "# result\n";
        out << "strands: " << embedded.strands << "\n";
        out << "word: " << io::format_int_word(embedded.letters) << "\n";
      };
    });
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    action();
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace monodromy::cli
