#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "splitdit/caption_graph.hpp"

namespace splitdit {

struct LlmRequest {
  std::string model;
  std::string system_prompt;
  std::string user_content;
  double temperature = 0.0;
};

struct LlmResponse {
  std::string raw_text;
  std::optional<PrimitiveSets> parsed;
  int attempts = 0;
};

/// Content-addressed record/replay store for chat completions. One JSON
/// file per key; entries are immutable once written, so concurrent writers
/// of identical content cannot conflict.
class ParserCache {
 public:
  explicit ParserCache(std::filesystem::path directory);

  static std::string key_of(const LlmRequest& req);

  std::optional<std::string> lookup(const std::string& key) const;
  void store(const std::string& key, const LlmRequest& req, const std::string& raw_text) const;

  const std::filesystem::path& directory() const { return dir_; }

 private:
  std::filesystem::path dir_;
};

struct NetPolicy {
  bool allow_network = false;
  int max_retries = 2;
  double timeout_s = 10.0;
};

/// Resolve a request through the cache, then (if allowed) over HTTP.
/// Base URL and credential come from SPLITDIT_LLM_URL / SPLITDIT_LLM_KEY.
/// Throws CacheMiss when offline with no entry, AuthMissing when no
/// endpoint or credential is configured, Transport after exhausted retries.
LlmResponse llm_complete(const LlmRequest& req, const ParserCache& cache,
                         const NetPolicy& net_policy);

struct LlmParserConfig {
  std::string model = "qwen-plus";
  std::filesystem::path cache_dir;
  NetPolicy net;
  int max_repairs = 2;
};

/// Fixed instruction used for every parsing request; temperature is 0.
const std::string& parser_system_prompt();

/// Parse a caption into primitive sets via the chat-completion client.
/// The reply is gated by the response schema; on schema failure the
/// request is re-issued with a repair instruction up to max_repairs times.
/// Duplicate objects are merged (first occurrence wins, attributes
/// unioned) and indices are rewritten to the merged list.
PrimitiveSets parse_with_llm(const std::string& caption, const LlmParserConfig& config);

/// Deterministic stand-in for the LLM over a controlled mini-grammar:
///
///   caption  := phrase (REL phrase)*
///   phrase   := [det] adjective{0..2} NOUN
///   det      := a | an | the
///   REL      := on | under | wearing | holding | next to | beside |
///               behind | in front of
///
/// Words are matched case-insensitively and emitted lowercase; the last
/// word of a phrase is the noun, preceding words its attributes. A phrase
/// of more than three non-determiner words is rejected. Throws
/// GrammarError with the byte offset of the first unparsable token.
PrimitiveSets parse_rule_based(const std::string& caption);

/// Post-parse normalization shared by both parsers: trims strings, merges
/// duplicate objects (first wins, attributes unioned), rewrites indices,
/// and drops exact duplicate relation triples and attribute pairs.
PrimitiveSets merge_duplicate_objects(const PrimitiveSets& prims);

}  // namespace splitdit
