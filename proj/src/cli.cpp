#include "boustro/cli.hpp"

#include "CLI11.hpp"
#include "boustro/doubleox.hpp"
#include "boustro/eigen.hpp"
#include "boustro/entringer.hpp"
#include "boustro/oracle.hpp"
#include "boustro/paths.hpp"
#include "boustro/sequence.hpp"
#include "boustro/transform.hpp"

#include <fstream>
#include <sstream>
#include <string>

namespace boustro::cli {

namespace {

// Shared input flags for subcommands that consume a sequence. Exactly one
// source must be given; --terms accompanies --builtin only.
struct SeqOptions {
  std::string literal;
  std::string file;
  std::string builtin;
  int terms = 0;
  CLI::Option* literal_opt = nullptr;
  CLI::Option* file_opt = nullptr;
  CLI::Option* builtin_opt = nullptr;
  CLI::Option* terms_opt = nullptr;
};

void add_sequence_options(CLI::App* cmd, SeqOptions& o) {
  o.literal_opt = cmd->add_option("--seq", o.literal, "comma-separated integer terms");
  o.file_opt = cmd->add_option("--input-file", o.file, "read terms from a csv line or b-file");
  o.builtin_opt =
      cmd->add_option("--builtin", o.builtin, "built-in input: ones|delta|zigzag|bell")
          ->check(CLI::IsMember({"ones", "delta", "zigzag", "bell"}));
  o.terms_opt = cmd->add_option("--terms", o.terms, "term count for --builtin")
                    ->check(CLI::PositiveNumber);
}

CLI::Option* add_format_option(CLI::App* cmd, std::string& fmt) {
  return cmd->add_option("--format", fmt, "output format: csv|bfile")
      ->check(CLI::IsMember({"csv", "bfile"}));
}

Sequence builtin_sequence(const std::string& name, int terms) {
  if (name == "ones") return Sequence(terms, Int(1));
  if (name == "delta") {
    Sequence s(terms, Int(0));
    s[0] = 1;
    return s;
  }
  if (name == "zigzag") return zigzag(terms - 1);
  return bell_numbers(terms);
}

Sequence resolve_sequence(const SeqOptions& o, std::istream& in) {
  const int sources = (o.literal_opt->count() > 0) + (o.file_opt->count() > 0) +
                      (o.builtin_opt->count() > 0);
  if (sources > 1)
    throw ParseError("at most one of --seq, --input-file, --builtin may be given");
  if (sources == 0) {
    // no source flag: read the sequence from standard input (pipe use)
    if (o.terms_opt->count() > 0) throw ParseError("--terms is only valid with --builtin");
    std::ostringstream text;
    text << in.rdbuf();
    return parse_sequence_text(text.str());
  }
  if (o.builtin_opt->count() > 0) {
    if (o.terms_opt->count() == 0) throw ParseError("--builtin requires --terms");
    return builtin_sequence(o.builtin, o.terms);
  }
  if (o.terms_opt->count() > 0) throw ParseError("--terms is only valid with --builtin");
  if (o.literal_opt->count() > 0) return parse_csv(o.literal);
  std::ifstream file(o.file);
  if (!file) throw ParseError("cannot open input file: " + o.file);
  std::ostringstream text;
  text << file.rdbuf();
  return parse_sequence_text(text.str());
}

void emit_sequence(std::ostream& out, const Sequence& seq, const std::string& fmt) {
  out << (fmt == "bfile" ? to_bfile(seq) : to_csv(seq));
}

}  // namespace

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"exact boustrophedon-transform toolkit"};
  app.require_subcommand(1);

  SeqOptions transform_in;
  bool inverse = false;
  std::string transform_fmt = "csv";
  CLI::App* cmd_transform =
      app.add_subcommand("transform", "boustrophedon transform of a sequence");
  add_sequence_options(cmd_transform, transform_in);
  cmd_transform->add_flag("--inverse", inverse, "apply the inverse transform");
  add_format_option(cmd_transform, transform_fmt);

  SeqOptions triangle_in;
  CLI::App* cmd_triangle =
      app.add_subcommand("triangle", "full transform triangle, one csv row per line");
  add_sequence_options(cmd_triangle, triangle_in);

  int entringer_n = 0;
  CLI::App* cmd_entringer =
      app.add_subcommand("entringer", "Entringer table rows 0..n_max, one csv row per line");
  cmd_entringer->add_option("n_max", entringer_n, "last row index")
      ->required()
      ->check(CLI::NonNegativeNumber);

  int seidel_n = 0;
  CLI::App* cmd_seidel =
      app.add_subcommand("seidel", "Entringer triangle in boustrophedon layout");
  cmd_seidel->add_option("n_max", seidel_n, "last row index")
      ->required()
      ->check(CLI::NonNegativeNumber);

  int pi_n = 0, pi_k = 0, pi_i = 0;
  CLI::App* cmd_pi =
      app.add_subcommand("pi", "boustrophedon number pi(n,k,i): paths from (i,0) to (n,k)");
  cmd_pi->add_option("n", pi_n, "target row")->required();
  cmd_pi->add_option("k", pi_k, "target column")->required();
  cmd_pi->add_option("i", pi_i, "start row")->required();

  SeqOptions doubleox_in;
  CLI::App* cmd_doubleox =
      app.add_subcommand("doubleox", "double-ox transform: messenger and output sequences");
  add_sequence_options(cmd_doubleox, doubleox_in);

  int eigen_s = 0, eigen_terms = 0;
  std::string eigen_fmt = "csv";
  CLI::App* cmd_eigen = app.add_subcommand(
      "eigen", "earliest sequence shifting s places left under the transform");
  cmd_eigen->add_option("--shift", eigen_s, "left shift s")
      ->required()
      ->check(CLI::PositiveNumber);
  cmd_eigen->add_option("--terms", eigen_terms, "number of terms")
      ->required()
      ->check(CLI::PositiveNumber);
  add_format_option(cmd_eigen, eigen_fmt);

  CLI::App* cmd_oracle = app.add_subcommand("oracle", "brute-force reference enumerations");
  cmd_oracle->require_subcommand(1);
  int downup_n = 0;
  CLI::App* cmd_downup = cmd_oracle->add_subcommand(
      "downup", "all down-up permutations of {1..n}, one csv line each");
  cmd_downup->add_option("n", downup_n, "permutation size")
      ->required()
      ->check(CLI::NonNegativeNumber);
  int bell_terms = 0;
  std::string bell_fmt = "csv";
  CLI::App* cmd_bell = cmd_oracle->add_subcommand("bell", "Bell numbers 1,1,2,5,15,...");
  cmd_bell->add_option("n_terms", bell_terms, "number of terms")
      ->required()
      ->check(CLI::PositiveNumber);
  add_format_option(cmd_bell, bell_fmt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << '\n';
    return 1;
  }

  try {
    if (cmd_transform->parsed()) {
      const Sequence a = resolve_sequence(transform_in, in);
      emit_sequence(out, inverse ? inverse_boustrophedon(a) : boustrophedon(a), transform_fmt);
    } else if (cmd_triangle->parsed()) {
      for (const auto& row : triangle(resolve_sequence(triangle_in, in))) out << to_csv(row);
    } else if (cmd_entringer->parsed()) {
      for (const auto& row : entringer_table(entringer_n)) out << to_csv(row);
    } else if (cmd_seidel->parsed()) {
      out << render_seidel(entringer_table(seidel_n));
    } else if (cmd_pi->parsed()) {
      out << path_count(pi_n, pi_k, pi_i) << '\n';
    } else if (cmd_doubleox->parsed()) {
      const DoubleOxResult r = double_ox(resolve_sequence(doubleox_in, in));
      out << "m: " << to_csv(r.m);
      out << "b: " << to_csv(r.b);
    } else if (cmd_eigen->parsed()) {
      emit_sequence(out, eigen_shift(eigen_s, eigen_terms), eigen_fmt);
    } else if (cmd_downup->parsed()) {
      for (const auto& perm : enumerate_downup(downup_n)) {
        for (size_t j = 0; j < perm.size(); ++j) {
          if (j) out << ',';
          out << perm[j];
        }
        out << '\n';
      }
    } else if (cmd_bell->parsed()) {
      emit_sequence(out, bell_numbers(bell_terms), bell_fmt);
    }
    return 0;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace boustro::cli
