#include "coxtwist/coxtwist.h"

#include <cstring>
#include <memory>
#include <string>

#include <json.hpp>

#include "coxtwist/catalogue.hpp"
#include "coxtwist/classify.hpp"
#include "coxtwist/emit.hpp"
#include "coxtwist/error.hpp"
#include "coxtwist/maximality.hpp"
#include "coxtwist/moves.hpp"
#include "coxtwist/system_file.hpp"
#include "coxtwist/verify.hpp"

using namespace coxtwist;
using nlohmann::json;

struct ctw_system {
  CoxeterSystem system;
  std::shared_ptr<const CoxeterGroup> group;
  std::unique_ptr<Twist> twist;
};

namespace {

thread_local std::string g_last_error;

// Output larger than this is refused with CTW_OVERFLOW.
constexpr std::uint64_t kExpressionLimit = 1'000'000;

ctw_status statusOf(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidInput: return CTW_INVALID_INPUT;
    case ErrorCode::NotReduced: return CTW_NOT_REDUCED;
    case ErrorCode::NotFinite: return CTW_NOT_FINITE;
    case ErrorCode::NotDescent: return CTW_NOT_DESCENT;
    case ErrorCode::InfiniteBond: return CTW_INFINITE_BOND;
    case ErrorCode::DifferentElement: return CTW_DIFFERENT_ELEMENT;
    case ErrorCode::HypothesisViolated: return CTW_HYPOTHESIS_VIOLATED;
    case ErrorCode::NotRightAngled: return CTW_NOT_RIGHT_ANGLED;
    case ErrorCode::NotIdentityTwist: return CTW_NOT_IDENTITY_TWIST;
    case ErrorCode::Overflow: return CTW_OVERFLOW;
  }
  return CTW_INTERNAL;
}

template <class F>
ctw_status guarded(F&& body) {
  try {
    g_last_error.clear();
    return body();
  } catch (const Error& e) {
    g_last_error = e.what();
    return statusOf(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return CTW_OVERFLOW;
  } catch (const std::exception& e) {
    g_last_error = std::string("internal error: ") + e.what();
    return CTW_INTERNAL;
  }
}

void require(const void* p, const char* what) {
  if (!p) throw Error(ErrorCode::InvalidInput, std::string(what) + " is null");
}

char* copyString(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

ctw_status emit(char** out, const std::string& text, ctw_status status = CTW_OK) {
  *out = copyString(text);
  return status;
}

ctw_system* makeSystem(CoxeterSystem system) {
  auto out = std::make_unique<ctw_system>(ctw_system{std::move(system), nullptr, nullptr});
  out->group = std::make_shared<const CoxeterGroup>(out->system.matrix);
  out->twist = std::make_unique<Twist>(out->group, out->system.theta);
  return out.release();
}

std::string trimmed(const char* text) {
  std::string s(text);
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t\r\n") - b + 1);
}

Element elementArg(const ctw_system& sys, const char* text) {
  require(text, "word");
  if (trimmed(text) == "w0")
    return sys.group->longestElement(GeneratorSet::all(sys.group->rank()));
  const Word word = parseWord(text, sys.group->rank());
  return sys.group->normalize(word);
}

TwistedInvolution involutionArg(const ctw_system& sys, const char* text) {
  require(text, "word");
  if (trimmed(text) == "w0")
    return sys.twist->twistedInvolution(
        sys.group->longestElement(GeneratorSet::all(sys.group->rank())));
  return sys.twist->evalShat(parseShatWord(text, sys.group->rank()));
}

json wordJson(const std::vector<Generator>& word) {
  json out = json::array();
  for (Generator g : word) out.push_back(g + 1);
  return out;
}

json setJson(GeneratorSet set) {
  json out = json::array();
  for (Generator g : set.members()) out.push_back(g + 1);
  return out;
}

Regime regimeOf(ctw_regime regime) {
  switch (regime) {
    case CTW_REGIME_BRAID: return Regime::Braid;
    case CTW_REGIME_HALFBRAID: return Regime::HalfBraid;
    case CTW_REGIME_FULL: return Regime::Full;
  }
  throw Error(ErrorCode::InvalidInput, "unknown regime");
}

std::string systemName(const ctw_system& sys) {
  if (!sys.system.name.empty()) return sys.system.name;
  return classifyParabolic(sys.system.matrix, GeneratorSet::all(sys.group->rank()))
      .name();
}

void checkExpressionCount(const ctw_system& sys, const TwistedInvolution& w) {
  const auto count = sys.twist->countReducedExpressions(w);
  if (count > kExpressionLimit)
    throw Error(ErrorCode::Overflow,
                std::to_string(count) + " reduced expressions exceed the limit of " +
                    std::to_string(kExpressionLimit));
}

}  // namespace

extern "C" {

const char* ctw_last_error(void) { return g_last_error.c_str(); }

const char* ctw_status_name(ctw_status status) {
  switch (status) {
    case CTW_OK: return "ok";
    case CTW_INVALID_INPUT: return "invalid input";
    case CTW_NOT_REDUCED: return "not reduced";
    case CTW_NOT_FINITE: return "not finite";
    case CTW_NOT_DESCENT: return "not a descent";
    case CTW_INFINITE_BOND: return "infinite bond";
    case CTW_DIFFERENT_ELEMENT: return "different element";
    case CTW_HYPOTHESIS_VIOLATED: return "hypothesis violated";
    case CTW_NOT_RIGHT_ANGLED: return "not right-angled";
    case CTW_NOT_IDENTITY_TWIST: return "not identity twist";
    case CTW_OVERFLOW: return "overflow";
    case CTW_NOT_CONNECTED: return "not connected";
    case CTW_CHECK_FAILED: return "check failed";
    case CTW_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void ctw_string_free(char* s) { std::free(s); }

ctw_status ctw_system_load_file(const char* path, ctw_system** out) {
  return guarded([&] {
    require(path, "path");
    require(out, "out");
    *out = makeSystem(loadSystem(path));
    return CTW_OK;
  });
}

ctw_status ctw_system_load_json(const char* text, ctw_system** out) {
  return guarded([&] {
    require(text, "json");
    require(out, "out");
    *out = makeSystem(parseSystem(text));
    return CTW_OK;
  });
}

ctw_status ctw_system_from_type(const char* name, ctw_system** out) {
  return guarded([&] {
    require(name, "name");
    require(out, "out");
    CoxeterMatrix matrix = catalogue::byName(name);
    const std::size_t n = matrix.rank();
    *out = makeSystem(CoxeterSystem{name, std::move(matrix), Automorphism::identity(n)});
    return CTW_OK;
  });
}

ctw_status ctw_system_set_theta(ctw_system* system, const char* theta) {
  return guarded([&] {
    require(system, "system");
    require(theta, "theta");
    Automorphism parsed = parseTheta(theta, system->system.matrix);
    system->twist = std::make_unique<Twist>(system->group, parsed);
    system->system.theta = std::move(parsed);
    return CTW_OK;
  });
}

void ctw_system_free(ctw_system* system) { delete system; }

size_t ctw_system_rank(const ctw_system* system) {
  return system ? system->group->rank() : 0;
}

ctw_status ctw_system_describe(const ctw_system* system, char** out) {
  return guarded([&] {
    require(system, "system");
    require(out, "out");
    return emit(out, systemToJson(system->system) + "\n");
  });
}

ctw_status ctw_normalize(const ctw_system* system, const char* word, int hat,
                         ctw_format format, char** out) {
  return guarded([&] {
    require(system, "system");
    require(out, "out");
    const CoxeterGroup& group = *system->group;
    const Twist& twist = *system->twist;
    json doc;
    if (!hat) {
      const bool keyword = trimmed(word ? word : "") == "w0";
      const Element w = elementArg(*system, word);
      const Word input = keyword ? group.normalForm(w) : parseWord(word, group.rank());
      doc = {{"word", wordJson(input)},
             {"reduced", group.isReducedWord(input)},
             {"normal_form", wordJson(group.normalForm(w))},
             {"length", group.length(w)},
             {"right_descents", setJson(group.rightDescents(w))},
             {"left_descents", setJson(group.leftDescents(w))}};
    } else {
      ShatWord input;
      if (trimmed(word ? word : "") == "w0")
        input = twist.standardExpression(involutionArg(*system, word));
      else
        input = parseShatWord(word, group.rank());
      const TwistedInvolution w = twist.evalShat(input);
      const bool reduced = twist.isReducedShat(input);
      const Word ord = twist.ordExpand(input);
      doc = {{"word", wordJson(input.letters)},
             {"reduced", reduced},
             {"normal_form", wordJson(group.normalForm(w.element))},
             {"length", group.length(w.element)},
             {"rank", w.rank},
             {"twisted_absolute_length", w.twisted_absolute_length},
             {"ord", wordJson(ord)},
             {"ord_reduced", group.isReducedWord(ord)},
             {"standard", wordJson(twist.standardExpression(w).letters)},
             {"descents", setJson(twist.shatRightDescents(w))}};
    }
    if (format == CTW_FORMAT_JSON) return emit(out, doc.dump() + "\n");
    std::string text;
    auto word_of = [](const json& arr) {
      Word w;
      for (const auto& v : arr) w.push_back(static_cast<Generator>(v.get<int>() - 1));
      return formatWord(w);
    };
    auto set_of = [](const json& arr) {
      GeneratorSet s;
      for (const auto& v : arr) s.insert(static_cast<Generator>(v.get<int>() - 1));
      return formatSet(s);
    };
    text += "word                     " + word_of(doc["word"]) + "\n";
    text += std::string("reduced                  ") + (doc["reduced"].get<bool>() ? "yes" : "no") + "\n";
    text += "normal form              " + word_of(doc["normal_form"]) + "\n";
    text += "length                   " + doc["length"].dump() + "\n";
    if (!hat) {
      text += "right descents           " + set_of(doc["right_descents"]) + "\n";
      text += "left descents            " + set_of(doc["left_descents"]) + "\n";
    } else {
      text += "rank                     " + doc["rank"].dump() + "\n";
      text += "twisted absolute length  " + doc["twisted_absolute_length"].dump() + "\n";
      text += "ord                      " + word_of(doc["ord"]) + "\n";
      text += std::string("ord reduced              ") + (doc["ord_reduced"].get<bool>() ? "yes" : "no") + "\n";
      text += "standard expression      " + word_of(doc["standard"]) + "\n";
      text += "descents                 " + set_of(doc["descents"]) + "\n";
    }
    return emit(out, text);
  });
}

ctw_status ctw_enumerate(const ctw_system* system, ctw_enum_target target,
                         const char* word, long long bound, ctw_format format,
                         char** out) {
  return guarded([&] {
    require(system, "system");
    require(out, "out");
    const CoxeterGroup& group = *system->group;
    const Twist& twist = *system->twist;
    std::string text;
    json doc;
    switch (target) {
      case CTW_ENUM_ELEMENT: {
        const Element w = elementArg(*system, word);
        const auto words = group.enumerateReducedWords(w);
        json list = json::array();
        for (const Word& x : words) {
          text += formatWord(x) + "\n";
          list.push_back(wordJson(x));
        }
        doc = {{"element", wordJson(group.normalForm(w))},
               {"count", words.size()},
               {"words", list}};
        break;
      }
      case CTW_ENUM_INVOLUTIONS: {
        std::optional<std::size_t> max_rank;
        if (bound >= 0) max_rank = static_cast<std::size_t>(bound);
        const auto invs = twist.enumerateTwistedInvolutions(max_rank);
        json list = json::array();
        for (const auto& w : invs) {
          const ShatWord standard = twist.standardExpression(w);
          text += std::to_string(w.rank) + "\t" + formatWord(standard) + "\t" +
                  formatWord(group.normalForm(w.element)) + "\n";
          list.push_back({{"rank", w.rank},
                          {"twisted_absolute_length", w.twisted_absolute_length},
                          {"standard", wordJson(standard.letters)},
                          {"normal_form", wordJson(group.normalForm(w.element))}});
        }
        doc = {{"count", invs.size()}, {"involutions", list}};
        break;
      }
      case CTW_ENUM_EXPRESSIONS: {
        const TwistedInvolution w = involutionArg(*system, word);
        checkExpressionCount(*system, w);
        const auto expressions = twist.reducedExpressions(w);
        json list = json::array();
        for (const ShatWord& e : *expressions) {
          text += formatWord(e) + "\n";
          list.push_back(wordJson(e.letters));
        }
        doc = {{"element", wordJson(group.normalForm(w.element))},
               {"rank", w.rank},
               {"count", expressions->size()},
               {"expressions", list}};
        break;
      }
      default:
        throw Error(ErrorCode::InvalidInput, "unknown enumeration target");
    }
    return emit(out, format == CTW_FORMAT_JSON ? doc.dump() + "\n" : text);
  });
}

ctw_status ctw_connect(const ctw_system* system, const char* from, const char* to,
                       ctw_regime regime, ctw_format format, char** out) {
  return guarded([&] {
    require(system, "system");
    require(from, "from");
    require(to, "to");
    require(out, "out");
    const std::size_t n = system->group->rank();
    const Regime r = regimeOf(regime);
    const MoveSet moves = movesFor(*system->group, system->twist->theta(), r);
    const auto path = connect(*system->twist, parseShatWord(from, n),
                              parseShatWord(to, n), moves);
    if (!path) {
      if (format == CTW_FORMAT_JSON)
        return emit(out,
                    json{{"connected", false}, {"regime", regimeName(r)}}.dump() + "\n",
                    CTW_NOT_CONNECTED);
      return emit(out, "not connected under " + regimeName(r) + "\n",
                  CTW_NOT_CONNECTED);
    }
    if (format == CTW_FORMAT_JSON) {
      json doc = json::parse(movePathJson(*path));
      doc["connected"] = true;
      doc["regime"] = regimeName(r);
      return emit(out, doc.dump() + "\n");
    }
    return emit(out, movePathText(*path));
  });
}

ctw_status ctw_graph(const ctw_system* system, const char* word,
                     ctw_graph_kind kind, ctw_regime regime, ctw_format format,
                     char** out) {
  return guarded([&] {
    require(system, "system");
    require(out, "out");
    const TwistedInvolution w = involutionArg(*system, word);
    if (kind == CTW_GRAPH_MAXIMALITY) {
      const MaximalityGraph g = maximalityGraph(*system->twist, w);
      return emit(out, format == CTW_FORMAT_JSON ? maximalityJson(g) : maximalityDot(g));
    }
    if (kind != CTW_GRAPH_EXPRESSIONS)
      throw Error(ErrorCode::InvalidInput, "unknown graph kind");
    checkExpressionCount(*system, w);
    const MoveSet moves =
        movesFor(*system->group, system->twist->theta(), regimeOf(regime));
    const ExpressionGraph g = expressionGraph(*system->twist, w, moves);
    return emit(out, format == CTW_FORMAT_JSON ? expressionGraphJson(g)
                                               : expressionGraphDot(g));
  });
}

void ctw_verify_options_default(ctw_verify_options* options) {
  if (!options) return;
  const VerifyOptions defaults;
  options->rank_bound = -1;
  options->length_bound = defaults.length_bound;
  options->cap = defaults.cap;
  options->samples = defaults.samples;
  options->threads = defaults.threads;
}

ctw_status ctw_verify(const ctw_system* system, ctw_suite suite,
                      const ctw_verify_options* options, ctw_format format,
                      char** out) {
  return guarded([&] {
    require(system, "system");
    require(out, "out");
    ctw_verify_options c_options;
    ctw_verify_options_default(&c_options);
    if (options) c_options = *options;
    VerifyOptions opts;
    if (c_options.rank_bound >= 0)
      opts.rank_bound = static_cast<std::size_t>(c_options.rank_bound);
    opts.length_bound = c_options.length_bound;
    opts.cap = c_options.cap;
    opts.samples = c_options.samples;
    opts.threads = c_options.threads;
    opts.system_name = systemName(*system);
    const Twist& twist = *system->twist;

    VerificationReport report;
    switch (suite) {
      case CTW_SUITE_WORD_PROPERTY: report = verifyWordProperty(twist, opts); break;
      case CTW_SUITE_NECESSITY: report = verifyNecessity(twist, opts); break;
      case CTW_SUITE_HALF_BRAID: report = verifyHalfBraidSufficiency(twist, opts); break;
      case CTW_SUITE_RIGHT_ANGLED: report = verifyRightAngled(twist, opts); break;
      case CTW_SUITE_ALL: {
        report = verifyWordProperty(twist, opts);
        using Suite = VerificationReport (*)(const Twist&, const VerifyOptions&);
        const std::pair<const char*, Suite> optional_suites[] = {
            {"necessity", &verifyNecessity},
            {"half-braid", &verifyHalfBraidSufficiency},
            {"right-angled", &verifyRightAngled}};
        for (const auto& [name, run] : optional_suites) {
          try {
            report.merge(run(twist, opts));
          } catch (const Error& e) {
            if (e.code() != ErrorCode::HypothesisViolated &&
                e.code() != ErrorCode::NotRightAngled &&
                e.code() != ErrorCode::NotIdentityTwist)
              throw;
            report.notes.push_back(std::string(name) + " skipped: " + e.what());
          }
        }
        break;
      }
      default:
        throw Error(ErrorCode::InvalidInput, "unknown suite");
    }
    const std::string text =
        format == CTW_FORMAT_JSON ? reportJson(report) : reportText(report);
    return emit(out, text, report.passed() ? CTW_OK : CTW_CHECK_FAILED);
  });
}

ctw_status ctw_classify(const ctw_system* system, ctw_format format, char** out) {
  return guarded([&] {
    require(system, "system");
    require(out, "out");
    const CoxeterMatrix& matrix = system->system.matrix;
    const GeneratorSet all = GeneratorSet::all(matrix.rank());
    const FiniteTypeTag tag = classifyParabolic(matrix, all);
    const auto instances = minimalMoveInstances(*system->group, system->twist->theta());

    json components = json::array();
    for (const ComponentType& c : tag.components)
      components.push_back({{"type", c.name()},
                            {"labels", wordJson(c.labels)},
                            {"longest_length", c.longestLength()}});
    json moves = json::array();
    for (const InitialMove& m : instances)
      moves.push_back({{"class", className(m.kind)},
                       {"support", setJson(m.support)},
                       {"source", wordJson(m.source.letters)},
                       {"target", wordJson(m.target.letters)}});
    json doc{{"type", tag.name()},
             {"rank", matrix.rank()},
             {"finite", !tag.infinite},
             {"right_angled", matrix.isRightAngled()},
             {"theta", formatTheta(system->twist->theta())},
             {"components", components},
             {"minimal_moves", moves}};
    if (!tag.infinite) doc["longest_length"] = tag.longestLength();
    if (format == CTW_FORMAT_JSON) return emit(out, doc.dump() + "\n");

    std::string text = "type          " + tag.name() + "\n";
    text += "rank          " + std::to_string(matrix.rank()) + "\n";
    text += std::string("finite        ") + (tag.infinite ? "no" : "yes") + "\n";
    if (!tag.infinite)
      text += "l(w0)         " + std::to_string(tag.longestLength()) + "\n";
    text += std::string("right-angled  ") + (matrix.isRightAngled() ? "yes" : "no") + "\n";
    text += "theta         " + formatTheta(system->twist->theta()) + "\n";
    for (const ComponentType& c : tag.components) {
      std::string labels;
      for (Generator g : c.labels) labels += " s" + std::to_string(g + 1);
      text += "component     " + c.name() + ":" + labels + "\n";
    }
    for (const InitialMove& m : instances)
      text += "minimal move  " + describe(m) + "\n";
    return emit(out, text);
  });
}

}  // extern "C"
