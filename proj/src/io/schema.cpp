#include "pickwick/io/schema.hpp"

#include <algorithm>

namespace pickwick::io {

namespace {

using nlohmann::json;

std::string escape(const std::string& token) {
  std::string out;
  for (char c : token) {
    if (c == '~') out += "~0";
    else if (c == '/') out += "~1";
    else out += c;
  }
  return out;
}

bool has_type(const json& doc, const std::string& type) {
  if (type == "object") return doc.is_object();
  if (type == "array") return doc.is_array();
  if (type == "string") return doc.is_string();
  if (type == "boolean") return doc.is_boolean();
  if (type == "null") return doc.is_null();
  if (type == "number") return doc.is_number();
  if (type == "integer") {
    if (doc.is_number_integer()) return true;
    if (!doc.is_number_float()) return false;
    const double v = doc.get<double>();
    return v == static_cast<double>(static_cast<long long>(v));
  }
  return false;
}

class Validator {
 public:
  explicit Validator(const json& root) : root_(root) {}

  void run(const json& schema, const json& doc, const std::string& ptr, std::vector<SchemaViolation>& out) const {
    if (schema.is_boolean()) {
      if (!schema.get<bool>()) out.push_back({ptr, "value not allowed"});
      return;
    }
    if (auto it = schema.find("$ref"); it != schema.end()) {
      run(resolve(it->get<std::string>()), doc, ptr, out);
      return;
    }
    if (auto it = schema.find("type"); it != schema.end()) {
      std::vector<std::string> types;
      if (it->is_string()) types.push_back(it->get<std::string>());
      else types = it->get<std::vector<std::string>>();
      if (std::none_of(types.begin(), types.end(), [&](const std::string& t) { return has_type(doc, t); })) {
        std::string joined;
        for (const auto& t : types) joined += (joined.empty() ? "" : " or ") + t;
        out.push_back({ptr, "expected " + joined});
        return;
      }
    }
    if (auto it = schema.find("const"); it != schema.end() && *it != doc)
      out.push_back({ptr, "expected " + it->dump()});
    if (auto it = schema.find("enum"); it != schema.end()) {
      if (std::find(it->begin(), it->end(), doc) == it->end()) out.push_back({ptr, "value not in " + it->dump()});
    }
    if (doc.is_number()) numeric(schema, doc.get<double>(), ptr, out);
    if (doc.is_object()) object(schema, doc, ptr, out);
    if (doc.is_array()) array(schema, doc, ptr, out);
    if (auto it = schema.find("anyOf"); it != schema.end()) {
      const bool any = std::any_of(it->begin(), it->end(), [&](const json& s) { return matches(s, doc); });
      if (!any) out.push_back({ptr, "no alternative of anyOf matches"});
    }
    if (auto it = schema.find("oneOf"); it != schema.end()) {
      const auto count = std::count_if(it->begin(), it->end(), [&](const json& s) { return matches(s, doc); });
      if (count != 1) out.push_back({ptr, std::to_string(count) + " alternatives of oneOf match, expected 1"});
    }
  }

 private:
  bool matches(const json& schema, const json& doc) const {
    std::vector<SchemaViolation> tmp;
    run(schema, doc, "", tmp);
    return tmp.empty();
  }

  const json& resolve(const std::string& ref) const {
    const std::string prefix = "#/$defs/";
    if (ref.rfind(prefix, 0) != 0) throw std::invalid_argument("unsupported $ref " + ref);
    return root_.at("$defs").at(ref.substr(prefix.size()));
  }

  static void numeric(const json& schema, double v, const std::string& ptr, std::vector<SchemaViolation>& out) {
    if (auto it = schema.find("minimum"); it != schema.end() && v < it->get<double>())
      out.push_back({ptr, "must be >= " + it->dump()});
    if (auto it = schema.find("maximum"); it != schema.end() && v > it->get<double>())
      out.push_back({ptr, "must be <= " + it->dump()});
    if (auto it = schema.find("exclusiveMinimum"); it != schema.end() && v <= it->get<double>())
      out.push_back({ptr, "must be > " + it->dump()});
    if (auto it = schema.find("exclusiveMaximum"); it != schema.end() && v >= it->get<double>())
      out.push_back({ptr, "must be < " + it->dump()});
  }

  void object(const json& schema, const json& doc, const std::string& ptr, std::vector<SchemaViolation>& out) const {
    if (auto it = schema.find("required"); it != schema.end())
      for (const auto& key : *it)
        if (!doc.contains(key.get<std::string>()))
          out.push_back({ptr + "/" + escape(key.get<std::string>()), "required property missing"});
    const json* props = nullptr;
    if (auto it = schema.find("properties"); it != schema.end()) props = &*it;
    const bool closed = schema.contains("additionalProperties") && schema["additionalProperties"].is_boolean() &&
                        !schema["additionalProperties"].get<bool>();
    for (auto it = doc.begin(); it != doc.end(); ++it) {
      const std::string child = ptr + "/" + escape(it.key());
      if (props && props->contains(it.key())) {
        run((*props)[it.key()], it.value(), child, out);
      } else if (closed) {
        out.push_back({child, "unexpected property"});
      }
    }
  }

  void array(const json& schema, const json& doc, const std::string& ptr, std::vector<SchemaViolation>& out) const {
    if (auto it = schema.find("minItems"); it != schema.end() && doc.size() < it->get<std::size_t>())
      out.push_back({ptr, "needs at least " + it->dump() + " items"});
    if (auto it = schema.find("maxItems"); it != schema.end() && doc.size() > it->get<std::size_t>())
      out.push_back({ptr, "allows at most " + it->dump() + " items"});
    if (auto it = schema.find("items"); it != schema.end())
      for (std::size_t i = 0; i < doc.size(); ++i) run(*it, doc[i], ptr + "/" + std::to_string(i), out);
  }

  const json& root_;
};

}  // namespace

std::vector<SchemaViolation> validate(const nlohmann::json& schema, const nlohmann::json& doc) {
  std::vector<SchemaViolation> out;
  Validator(schema).run(schema, doc, "", out);
  return out;
}

}  // namespace pickwick::io
