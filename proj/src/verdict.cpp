#include "plrs/verdict.hpp"

#include "plrs/error.hpp"

namespace plrs {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

}  // namespace

std::string_view to_string(VerdictKind kind) noexcept {
  switch (kind) {
    case VerdictKind::Complete: return "complete";
    case VerdictKind::Incomplete: return "incomplete";
    case VerdictKind::Unknown: return "unknown";
  }
  return "unknown";
}

std::string certificate_tag(const Certificate& c) {
  return std::visit(
      overloaded{
          [](const cert::StrictWindow&) -> std::string { return "strict_window"; },
          [](const cert::DoublingWindow&) -> std::string { return "doubling_window"; },
          [](const cert::FamilyRule& f) -> std::string { return "family:" + f.rule; },
          [](const cert::RootTriage& r) -> std::string { return "root:" + r.path; },
          [](const cert::Failure&) -> std::string { return "failure"; },
          [](const cert::HorizonExhausted&) -> std::string { return "horizon"; },
      },
      c);
}

std::optional<std::size_t> certificate_index(const Certificate& c) {
  return std::visit(overloaded{
                        [](const cert::StrictWindow& s) -> std::optional<std::size_t> { return s.window; },
                        [](const cert::DoublingWindow& d) -> std::optional<std::size_t> { return d.window; },
                        [](const cert::FamilyRule&) -> std::optional<std::size_t> { return std::nullopt; },
                        [](const cert::RootTriage&) -> std::optional<std::size_t> { return std::nullopt; },
                        [](const cert::Failure& f) -> std::optional<std::size_t> { return f.index; },
                        [](const cert::HorizonExhausted& h) -> std::optional<std::size_t> { return h.horizon; },
                    },
                    c);
}

nlohmann::json to_json(const Verdict& v) {
  nlohmann::json j;
  j["coefficients"] = std::vector<std::uint64_t>(v.coefficients.values().begin(),
                                                 v.coefficients.values().end());
  j["kind"] = std::string(to_string(v.kind));
  j["certificate"] = certificate_tag(v.certificate);
  if (auto idx = certificate_index(v.certificate)) {
    j["index"] = *idx;
  } else {
    j["index"] = nullptr;
  }
  j["conjectural"] = v.conjectural;
  j["horizon_used"] = v.horizon_used;
  return j;
}

Verdict verdict_from_json(const nlohmann::json& j) {
  try {
    std::vector<std::int64_t> raw = j.at("coefficients").get<std::vector<std::int64_t>>();
    Coefficients c = Coefficients::validate(raw);

    const auto kind_text = j.at("kind").get<std::string>();
    VerdictKind kind;
    if (kind_text == "complete") {
      kind = VerdictKind::Complete;
    } else if (kind_text == "incomplete") {
      kind = VerdictKind::Incomplete;
    } else if (kind_text == "unknown") {
      kind = VerdictKind::Unknown;
    } else {
      throw Error(Errc::InvalidArgument, "unknown verdict kind '" + kind_text + "'");
    }

    const auto tag = j.at("certificate").get<std::string>();
    const auto& index_field = j.at("index");
    auto index = [&]() -> std::size_t {
      if (index_field.is_null()) throw Error(Errc::InvalidArgument, tag + " needs an index");
      return index_field.get<std::size_t>();
    };

    Certificate certificate;
    if (tag == "strict_window") {
      certificate = cert::StrictWindow{index()};
    } else if (tag == "doubling_window") {
      certificate = cert::DoublingWindow{index()};
    } else if (tag == "failure") {
      certificate = cert::Failure{index(), 0, std::nullopt};
    } else if (tag == "horizon") {
      certificate = cert::HorizonExhausted{index()};
    } else if (tag.rfind("family:", 0) == 0) {
      certificate = cert::FamilyRule{tag.substr(7)};
    } else if (tag.rfind("root:", 0) == 0) {
      certificate = cert::RootTriage{tag.substr(5)};
    } else {
      throw Error(Errc::InvalidArgument, "unknown certificate '" + tag + "'");
    }

    return Verdict{std::move(c), kind, std::move(certificate), j.at("conjectural").get<bool>(),
                   j.at("horizon_used").get<std::size_t>()};
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::InvalidArgument, std::string("malformed verdict JSON: ") + e.what());
  }
}

}  // namespace plrs
