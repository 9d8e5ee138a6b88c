// Copyright 2026 The Ordinal Codes Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "ordinal/autoencoder.h"
#include "ordinal/error.h"
#include "ordinal/experiment.h"
#include "ordinal/huffman.h"
#include "ordinal/io.h"
#include "ordinal/stdp.h"
#include "ordinal/tasks.h"
#include "ordinal/tree.h"
#include "ordinal/verify.h"

namespace ordinal::cli {
namespace {

using nlohmann::json;
namespace fs = std::filesystem;

// Flags shared by every subcommand. Values given on the command line
// override those read from --config.
struct Common {
  std::string config_path;
  std::string in;
  std::string out;
  std::string format = "jsonl";
  std::string seq;
  std::uint64_t seed = 0;
  std::size_t k = 0;
  double theta = 0.0;
  std::string kernel;

  CLI::App* app = nullptr;  // the subcommand that was invoked

  ExperimentConfig config;  // resolved by Resolve()

  void Attach(CLI::App* sub) {
    sub->add_option("--config", config_path, "flat key = value config file");
    sub->add_option("--in", in, "input file ('-' for stdin)");
    sub->add_option("--out", out, "output file (default stdout)");
    sub->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"jsonl", "csv"}));
    sub->add_option("--seed", seed, "root seed");
    sub->add_option("--k", k, "Y population size");
    sub->add_option("--theta", theta, "novelty threshold");
    sub->add_option("--kernel", kernel, "STDP kernel")
        ->check(CLI::IsMember({"const", "invdist"}));
  }

  bool Given(const char* flag) const { return app->get_option(flag)->count() > 0; }

  void Resolve() {
    if (!config_path.empty()) {
      config = ExperimentConfig::Parse(io::ReadTextFile(config_path));
    }
    if (Given("--seed")) config.seed = seed;
    if (Given("--k")) config.k = k;
    if (Given("--theta")) config.theta = theta;
    if (Given("--kernel")) config.kernel = ParseStdpKernel(kernel);
    if (Given("--in")) config.in = in;
    if (Given("--out")) config.out = out;
    config.Validate();
  }

  bool csv() const { return format == "csv"; }
};

std::vector<std::string> SplitList(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    const auto first = part.find_first_not_of(' ');
    const auto last = part.find_last_not_of(' ');
    parts.push_back(first == std::string::npos
                        ? std::string()
                        : part.substr(first, last - first + 1));
  }
  return parts;
}

std::vector<int> ParseIntList(const std::string& text) {
  std::vector<int> out;
  for (const auto& part : SplitList(text)) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(part, &used));
      if (used != part.size()) throw std::invalid_argument(part);
    } catch (const std::exception&) {
      throw Error(ErrorCode::kParseError, "not an integer: '" + part + "'");
    }
  }
  return out;
}

// "18,13,8" -> numbers; anything non-numeric makes the whole list tokens.
Sequence ParseInlineSequence(const std::string& text) {
  const auto parts = SplitList(text);
  std::vector<Item> numbers;
  for (const auto& part : parts) {
    char* end = nullptr;
    const double v = std::strtod(part.c_str(), &end);
    if (part.empty() || end != part.c_str() + part.size()) {
      return Sequence::FromTokens(parts);
    }
    numbers.emplace_back(v);
  }
  return Sequence(std::move(numbers));
}

std::string ReadInput(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  return io::ReadTextFile(path);
}

std::vector<json> ReadJsonlInput(const std::string& path) {
  std::istringstream in(ReadInput(path));
  return io::ReadJsonl(in);
}

std::vector<io::SequenceRecord> LoadSequences(const Common& c) {
  if (!c.seq.empty()) return {{"seq", ParseInlineSequence(c.seq)}};
  if (c.config.in.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "give --in FILE or --seq LIST");
  }
  std::istringstream in(ReadInput(c.config.in));
  return io::ReadSequences(in);
}

fs::path ResolveOutPath(const std::string& out) {
  fs::path path(out);
  const char* dir = std::getenv(kOutDirEnv);
  if (path.is_relative() && dir != nullptr && *dir != '\0') {
    path = fs::path(dir) / path;
  }
  return path;
}

// Output is assembled in memory and written only once the command has
// succeeded.
void Emit(const Common& c, const std::string& contents, std::ostream& out) {
  if (c.config.out.empty()) {
    out << contents;
  } else {
    io::WriteFileAtomic(ResolveOutPath(c.config.out), contents);
  }
}

std::string CsvField(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char ch : s) {
    if (ch == '"') quoted += '"';
    quoted += ch;
  }
  return quoted + "\"";
}

std::string Num(double v) { return json(v).dump(); }

// ------------------------------------------------------------ commands

int CmdEncode(Common& c, std::ostream& out) {
  c.Resolve();
  std::ostringstream body;
  for (const auto& record : LoadSequences(c)) {
    const auto pop =
        YPopulation::Generate(c.config.seed, c.config.k, record.sequence.size());
    const auto y = Encode(record.sequence, pop);
    const RankCode rank = RankCodeOf(record.sequence);
    if (c.csv()) {
      body << CsvField(record.id);
      for (double v : y) body << ',' << Num(v);
      body << '\n';
    } else {
      body << json{{"id", record.id}, {"rank", rank.ranks()}, {"y", y}}.dump()
           << '\n';
    }
  }
  Emit(c, body.str(), out);
  return kOk;
}

int CmdLearn(Common& c, const std::string& book_path, std::ostream& out) {
  c.Resolve();
  const auto records = LoadSequences(c);
  if (records.empty()) throw Error(ErrorCode::kEmptySequence, "no sequences");
  const std::size_t n = records.front().sequence.size();
  std::optional<Codebook> book;
  if (fs::exists(book_path)) {
    book = io::CodebookFromJson(io::ReadJsonFile(book_path));
  } else {
    book.emplace(c.config.seed, c.config.k, n, c.config.theta);
  }
  const YPopulation pop = book->Population();
  std::ostringstream body;
  if (c.csv()) body << "id,z,novel\n";
  for (const auto& record : records) {
    auto result = Learn(record.sequence, pop, *book, record.id);
    book = std::move(result.book);
    if (c.csv()) {
      body << CsvField(record.id) << ',' << result.z << ','
           << (result.novel ? 1 : 0) << '\n';
    } else {
      body << json{{"id", record.id}, {"z", result.z}, {"novel", result.novel}}
                  .dump()
           << '\n';
    }
  }
  io::WriteFileAtomic(book_path, io::CodebookToJson(*book).dump(2) + "\n");
  Emit(c, body.str(), out);
  return kOk;
}

int CmdRecognize(Common& c, const std::string& book_path, std::ostream& out) {
  c.Resolve();
  const Codebook book = io::CodebookFromJson(io::ReadJsonFile(book_path));
  const YPopulation pop = book.Population();
  std::ostringstream body;
  if (c.csv()) body << "id,z,similarity\n";
  for (const auto& record : LoadSequences(c)) {
    const Recognition r = Recognize(record.sequence, pop, book);
    if (c.csv()) {
      body << CsvField(record.id) << ',' << r.z << ',' << Num(r.similarity) << '\n';
    } else {
      body << json{{"id", record.id}, {"z", r.z}, {"similarity", r.similarity}}
                  .dump()
           << '\n';
    }
  }
  Emit(c, body.str(), out);
  return kOk;
}

int CmdDecode(Common& c, const std::string& book_path, std::optional<int> z,
              std::ostream& out) {
  c.Resolve();
  const Codebook book = io::CodebookFromJson(io::ReadJsonFile(book_path));
  std::vector<std::pair<std::string, std::pair<int, std::vector<Item>>>> jobs;
  if (!c.seq.empty()) {
    if (!z) throw Error(ErrorCode::kInvalidArgument, "--seq needs --z");
    jobs.push_back({"seq", {*z, ParseInlineSequence(c.seq).items()}});
  } else {
    if (c.config.in.empty()) {
      throw Error(ErrorCode::kInvalidArgument, "give --in FILE or --z and --seq");
    }
    for (const json& j : ReadJsonlInput(c.config.in)) {
      if (!j.contains("z") || !j.at("z").is_number_integer() ||
          !j.contains("items") || !j.at("items").is_array()) {
        throw Error(ErrorCode::kParseError, "decode records need 'z' and 'items'");
      }
      std::vector<Item> bag;
      for (const json& item : j.at("items")) bag.push_back(io::ItemFromJson(item));
      jobs.push_back({j.value("id", std::string()), {j.at("z").get<int>(), bag}});
    }
  }
  std::ostringstream body;
  for (const auto& [id, job] : jobs) {
    const Sequence seq = Decode(job.first, job.second, book);
    if (c.csv()) {
      body << CsvField(id);
      for (const Item& item : seq.items()) body << ',' << CsvField(item.ToString());
      body << '\n';
    } else {
      body << io::SequenceToJson({id, seq}).dump() << '\n';
    }
  }
  Emit(c, body.str(), out);
  return kOk;
}

int CmdTree(Common& c, bool weights, bool dyck, std::ostream& out) {
  c.Resolve();
  std::ostringstream body;
  for (const auto& record : LoadSequences(c)) {
    if (weights) {
      const auto w = TreeOrderWeights(record.sequence).Formatted();
      if (c.csv()) {
        body << CsvField(record.id);
        for (const auto& v : w) body << ',' << v;
        body << '\n';
      } else {
        body << json{{"id", record.id}, {"weights", w}}.dump() << '\n';
      }
      continue;
    }
    const OrdinalTree tree = StackOrderTree(record.sequence);
    if (dyck) {
      const std::string word = TreeToDyck(tree).str();
      if (c.csv()) {
        body << CsvField(record.id) << ',' << word << '\n';
      } else {
        body << json{{"id", record.id}, {"dyck", word}}.dump() << '\n';
      }
    } else {
      body << json{{"id", record.id}, {"tree", io::TreeToJson(tree)}}.dump()
           << '\n';
    }
  }
  Emit(c, body.str(), out);
  return kOk;
}

int CmdDyck(Common& c, const std::optional<std::string>& validate,
            const std::string& sortable, std::ostream& out) {
  c.Resolve();
  std::ostringstream body;
  bool ok = true;
  if (validate) {
    ok = DyckValidate(*validate);
    body << (ok ? "true" : "false") << '\n';
  } else if (!sortable.empty()) {
    ok = IsStackSortable(RankCode(ParseIntList(sortable)));
    body << (ok ? "true" : "false") << '\n';
  } else {
    for (const auto& record : LoadSequences(c)) {
      body << json{{"id", record.id},
                   {"dyck", TreeToDyck(StackOrderTree(record.sequence)).str()}}
                  .dump()
           << '\n';
    }
  }
  Emit(c, body.str(), out);
  return ok ? kOk : kCheckFailed;
}

int CmdHuffmanBuild(Common& c, const std::string& table_path, int arity,
                    std::ostream& out) {
  c.Resolve();
  const SymbolTable table = io::SymbolTableFromJson(io::ReadJsonFile(table_path));
  const OrdinalCodec codec = OrdinalCodec::Build(table, arity);
  Emit(c, io::CodecToJson(codec).dump(2) + "\n", out);
  return kOk;
}

int CmdHuffmanEncode(Common& c, const std::string& codec_path,
                     const std::string& symbols, std::ostream& out) {
  c.Resolve();
  const OrdinalCodec codec = io::CodecFromJson(io::ReadJsonFile(codec_path));
  const auto list = symbols.empty() ? std::vector<std::string>{} : SplitList(symbols);
  Emit(c, json(codec.Encode(list)).dump() + "\n", out);
  return kOk;
}

int CmdHuffmanDecode(Common& c, const std::string& codec_path,
                     const std::string& labels, std::ostream& out) {
  c.Resolve();
  const OrdinalCodec codec = io::CodecFromJson(io::ReadJsonFile(codec_path));
  const auto list = labels.empty() ? std::vector<int>{} : ParseIntList(labels);
  Emit(c, json(codec.Decode(list)).dump() + "\n", out);
  return kOk;
}

int CmdStdpStore(Common& c, const std::string& rank, const std::string& units,
                 std::ostream& out) {
  c.Resolve();
  RankCode code = !rank.empty() ? RankCode(ParseIntList(rank))
                                : RankCodeOf(LoadSequences(c).front().sequence);
  const WeightMatrix w = StoreOrdinalPattern(
      code, c.config.kernel, units.empty() ? std::vector<std::string>{} : SplitList(units));
  Emit(c, io::MatrixToJson(w).dump() + "\n", out);
  return kOk;
}

int CmdStdpRecall(Common& c, const std::string& matrix_path,
                  const std::string& active, std::ostream& out) {
  c.Resolve();
  const WeightMatrix w = io::MatrixFromJson(io::ReadJsonFile(matrix_path));
  const auto cue = active.empty() ? w.units() : SplitList(active);
  const RecallResult r = Recall(w, cue);
  const double margin = NoiseMargin(w, cue);
  json j{{"order", r.order}, {"scores", r.scores}};
  j["margin"] = std::isfinite(margin) ? json(margin) : json(nullptr);
  Emit(c, j.dump() + "\n", out);
  return kOk;
}

int CmdStdpPerturb(Common& c, const std::string& matrix_path, double epsilon,
                   std::ostream& out) {
  c.Resolve();
  const WeightMatrix w = io::MatrixFromJson(io::ReadJsonFile(matrix_path));
  const WeightMatrix noisy =
      Perturb(w, epsilon, SplitSeed(c.config.seed, "stdp-perturb"));
  Emit(c, io::MatrixToJson(noisy).dump() + "\n", out);
  return kOk;
}

int CmdDetect(Common& c, const std::string& pattern, bool distinct,
              std::ostream& out) {
  c.Resolve();
  std::vector<json> records;
  if (!c.seq.empty()) {
    io::TokenRecord inline_record;
    inline_record.tokens = SplitList(c.seq);
    for (const auto& t : inline_record.tokens) inline_record.word += t;
    records.push_back(io::TokenRecordToJson(inline_record));
  } else if (!c.config.in.empty()) {
    records = ReadJsonlInput(c.config.in);
  } else {
    throw Error(ErrorCode::kInvalidArgument, "give --in FILE or --seq TOKENS");
  }
  std::optional<Template> tpl;
  if (!pattern.empty()) tpl = Template::Parse(pattern, distinct);
  std::ostringstream body;
  if (c.csv()) body << "word,signature,label,agrees,template_match,violation_position\n";
  for (const json& j : records) {
    const io::TokenRecord record = io::TokenRecordFromJson(j);
    const std::string signature = SignatureOf(record.tokens).str();
    json row{{"word", record.word}, {"signature", signature}};
    std::optional<bool> agrees;
    if (record.label) {
      agrees = *record.label == signature;
      row["label"] = *record.label;
      row["agrees"] = *agrees;
    }
    std::optional<TemplateMatch> match;
    if (tpl) {
      match = MatchTemplate(*tpl, record.tokens);
      row["template_match"] = match->ok();
      if (match->ok()) {
        row["bindings"] = match->bindings;
      } else {
        row["violation_position"] = match->violation->position;
      }
      if (match->degenerate) row["degenerate_template"] = true;
    }
    if (c.csv()) {
      body << CsvField(record.word) << ',' << signature << ','
           << CsvField(record.label.value_or("")) << ','
           << (agrees ? (*agrees ? "1" : "0") : "") << ','
           << (match ? (match->ok() ? "1" : "0") : "") << ','
           << (match && !match->ok() ? std::to_string(match->violation->position)
                                     : "")
           << '\n';
    } else {
      body << row.dump() << '\n';
    }
  }
  Emit(c, body.str(), out);
  return kOk;
}

int CmdHarlow(Common& c, int episodes, int trials, const std::string& explore,
              std::ostream& out) {
  c.Resolve();
  if (episodes < 1 || trials < 1) {
    throw Error(ErrorCode::kInvalidArgument, "episodes and trials must be >= 1");
  }
  Engine engine(SplitSeed(c.config.seed, "harlow"));
  std::vector<HarlowTrial> log;
  for (int e = 0; e < episodes; ++e) {
    const TaskSetAgent agent = explore == "random"
                                   ? TaskSetAgent::WithRandomExploration(engine)
                                   : TaskSetAgent(Door::kA);
    const Door reward = UniformIndex(engine, 2) == 0 ? Door::kA : Door::kB;
    const auto episode = RunHarlowEpisode(agent, reward, trials, e + 1);
    log.insert(log.end(), episode.begin(), episode.end());
  }
  std::ostringstream body;
  if (c.format == "jsonl") {
    for (const auto& row : log) {
      body << json{{"episode", row.episode},
                   {"trial", row.trial},
                   {"choice", std::string(1, DoorName(row.choice))},
                   {"reward", row.reward ? 1 : 0}}
                  .dump()
           << '\n';
    }
  } else {
    WriteHarlowCsv(body, log);
  }
  Emit(c, body.str(), out);
  return kOk;
}

int CmdVerify(Common& c, std::vector<std::string> suites, int jobs, bool timing,
              std::ostream& out) {
  c.Resolve();
  if (suites.empty() || (suites.size() == 1 && suites.front() == "all")) {
    suites = SuiteNames();
  }
  const auto reports = RunSuites(suites, c.config, jobs);
  std::string body;
  bool ok = true;
  for (const auto& report : reports) {
    body += report.Render(timing);
    ok &= report.passed();
  }
  Emit(c, body, out);
  return ok ? kOk : kCheckFailed;
}

int ExitCodeFor(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParseError: return kBadInput;
    case ErrorCode::kIoError: return kIoFailure;
    case ErrorCode::kUnknownSuite: return kUsage;
    default: return kPrecondition;
  }
}

void ReportError(std::ostream& err, std::string_view kind,
                 const std::string& message) {
  err << json{{"error", std::string(kind)}, {"message", message}}.dump() << '\n';
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Ordinal sequence codes: rank, tree, Dyck, Huffman, STDP, "
               "autoencoder and structure tasks"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Expand all help");

  Common common;
  auto add = [&](const char* name, const char* description) {
    CLI::App* sub = app.add_subcommand(name, description);
    common.Attach(sub);
    sub->add_option("--seq", common.seq, "inline sequence, e.g. 18,13,8");
    return sub;
  };

  std::function<int()> action;

  CLI::App* encode = add("encode", "Y-population activity for each sequence");
  encode->callback([&] { action = [&] { return CmdEncode(common, out); }; });

  std::string book_path;
  CLI::App* learn = add("learn", "Learn sequences into a codebook");
  learn->add_option("--codebook", book_path, "codebook JSON (created if absent)")
      ->required();
  learn->callback([&] { action = [&] { return CmdLearn(common, book_path, out); }; });

  CLI::App* recognize = add("recognize", "Best Z neuron for each sequence");
  recognize->add_option("--codebook", book_path, "codebook JSON")->required();
  recognize->callback(
      [&] { action = [&] { return CmdRecognize(common, book_path, out); }; });

  std::optional<int> z;
  CLI::App* decode = add("decode", "Arrange item bags by a stored rank code");
  decode->add_option("--codebook", book_path, "codebook JSON")->required();
  decode->add_option("--z", z, "Z neuron id for --seq");
  decode->callback(
      [&] { action = [&] { return CmdDecode(common, book_path, z, out); }; });

  bool tree_weights = false, tree_dyck = false;
  CLI::App* tree = add("tree", "Stack-order tree, dyadic weights or Dyck word");
  tree->add_flag("--weights", tree_weights, "emit dyadic weights");
  tree->add_flag("--dyck", tree_dyck, "emit the Dyck word");
  tree->callback([&] {
    action = [&] { return CmdTree(common, tree_weights, tree_dyck, out); };
  });

  std::optional<std::string> validate;
  std::string sortable;
  CLI::App* dyck = add("dyck", "Dyck-word validation and stack sortability");
  dyck->add_option("--validate", validate, "word to check");
  dyck->add_option("--sortable", sortable, "rank code to test, e.g. 2,3,1");
  dyck->callback(
      [&] { action = [&] { return CmdDyck(common, validate, sortable, out); }; });

  std::string table_path, codec_path, symbols, labels;
  int arity = 2;
  CLI::App* huffman = app.add_subcommand("huffman", "Ordinal Huffman codec");
  huffman->require_subcommand(1);
  CLI::App* hbuild = huffman->add_subcommand("build", "Build a codec");
  common.Attach(hbuild);
  hbuild->add_option("--table", table_path, "symbol table JSON")->required();
  hbuild->add_option("--arity", arity, "branching factor")->check(CLI::Range(2, 64));
  hbuild->callback([&] {
    action = [&] { return CmdHuffmanBuild(common, table_path, arity, out); };
  });
  CLI::App* hencode = huffman->add_subcommand("encode", "Encode symbols");
  common.Attach(hencode);
  hencode->add_option("--codec", codec_path, "codec JSON")->required();
  hencode->add_option("--symbols", symbols, "comma-separated symbols");
  hencode->callback([&] {
    action = [&] { return CmdHuffmanEncode(common, codec_path, symbols, out); };
  });
  CLI::App* hdecode = huffman->add_subcommand("decode", "Decode a label stream");
  common.Attach(hdecode);
  hdecode->add_option("--codec", codec_path, "codec JSON")->required();
  hdecode->add_option("--labels", labels, "comma-separated labels");
  hdecode->callback([&] {
    action = [&] { return CmdHuffmanDecode(common, codec_path, labels, out); };
  });

  std::string rank, units, matrix_path, active;
  double epsilon = 0.0;
  CLI::App* stdp = app.add_subcommand("stdp", "Ordinal STDP network");
  stdp->require_subcommand(1);
  CLI::App* store = stdp->add_subcommand("store", "Store a rank code");
  common.Attach(store);
  store->add_option("--rank", rank, "rank code, e.g. 5,3,2,4,1,6");
  store->add_option("--seq", common.seq, "inline sequence");
  store->add_option("--units", units, "comma-separated unit ids");
  store->callback([&] { action = [&] { return CmdStdpStore(common, rank, units, out); }; });
  CLI::App* recall = stdp->add_subcommand("recall", "Recall from a cue");
  common.Attach(recall);
  recall->add_option("--matrix", matrix_path, "weight matrix JSON")->required();
  recall->add_option("--active", active, "comma-separated cue (default all)");
  recall->callback(
      [&] { action = [&] { return CmdStdpRecall(common, matrix_path, active, out); }; });
  CLI::App* perturb = stdp->add_subcommand("perturb", "Add antisymmetric noise");
  common.Attach(perturb);
  perturb->add_option("--matrix", matrix_path, "weight matrix JSON")->required();
  perturb->add_option("--epsilon", epsilon, "noise amplitude")->required();
  perturb->callback(
      [&] { action = [&] { return CmdStdpPerturb(common, matrix_path, epsilon, out); }; });

  std::string pattern;
  bool distinct = false;
  CLI::App* detect = add("detect", "Structure signatures and template matches");
  detect->add_option("--template", pattern, "template such as XYX");
  detect->add_flag("--distinct", distinct, "variables bind distinct tokens");
  detect->callback(
      [&] { action = [&] { return CmdDetect(common, pattern, distinct, out); }; });

  int episodes = 4, trials = 6;
  std::string explore = "fixed";
  CLI::App* harlow = add("harlow", "Simulate Harlow task-set episodes");
  harlow->add_option("--episodes", episodes, "number of episodes");
  harlow->add_option("--trials", trials, "trials per episode");
  harlow->add_option("--explore", explore, "first door: fixed (A) or random")
      ->check(CLI::IsMember({"fixed", "random"}));
  harlow->callback([&] {
    if (!harlow->get_option("--format")->count()) common.format = "csv";
    action = [&] { return CmdHarlow(common, episodes, trials, explore, out); };
  });

  std::vector<std::string> suites;
  int jobs = 1;
  bool timing = false;
  CLI::App* verify = add("verify", "Run acceptance suites");
  verify->add_option("suites", suites, "suite names or 'all'");
  verify->add_option("--jobs", jobs, "parallel suites")->check(CLI::Range(1, 64));
  verify->add_flag("--timing", timing, "append runtimes (not reproducible)");
  verify->callback(
      [&] { action = [&] { return CmdVerify(common, suites, jobs, timing, out); }; });

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    ReportError(err, "UsageError", e.what());
    return kUsage;
  }

  common.app = &app;
  while (!common.app->get_subcommands().empty()) {
    common.app = common.app->get_subcommands().front();
  }
  try {
    return action();
  } catch (const Error& e) {
    ReportError(err, ErrorCodeName(e.code()), e.what());
    return ExitCodeFor(e.code());
  } catch (const std::exception& e) {
    ReportError(err, "InternalError", e.what());
    return kPrecondition;
  }
}

}  // namespace ordinal::cli
