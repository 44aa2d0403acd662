#include "cycgrp/corpus.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <istream>
#include <mutex>
#include <optional>
#include <thread>

namespace cycgrp {

std::vector<std::string> default_corpus() {
  std::vector<std::string> out;
  auto s = [](const char* name, std::size_t n) { return std::string(name) + "(" + std::to_string(n) + ")"; };

  for (std::size_t n = 1; n <= 200; ++n) out.push_back(s("C", n));
  for (std::size_t n = 2; n <= 200; n += 2) out.push_back(s("D", n));
  for (std::size_t n = 8; n <= 200; n += 4) out.push_back(s("Q", n));
  for (std::size_t n = 1; n <= 5; ++n) out.push_back(s("S", n));
  for (std::size_t n = 1; n <= 5; ++n) out.push_back(s("A", n));
  for (std::size_t k = 2; k <= 6; ++k) out.push_back("E(2," + std::to_string(k) + ")");
  out.push_back("E(3,2)");
  out.push_back("E(3,3)");
  out.push_back("E(5,2)");
  for (const char* es : {"ES(+,8)", "ES(-,8)", "ES(+,32)", "ES(-,32)"}) out.push_back(es);
  for (const char* ext : {"EXT16(+1,0)", "EXT16(+1,1)", "EXT16(-1,0)", "EXT16(-1,1)"}) out.push_back(ext);

  struct Atom {
    std::string text;
    std::size_t order;
  };
  std::vector<Atom> atoms;
  for (std::size_t n = 2; n <= 32; ++n) atoms.push_back({s("C", n), n});
  for (std::size_t n = 6; n <= 32; n += 2) atoms.push_back({s("D", n), n});
  for (std::size_t n = 8; n <= 32; n += 4) atoms.push_back({s("Q", n), n});
  atoms.push_back({"A(4)", 12});

  const std::size_t k = atoms.size();
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i; j < k; ++j)
      if (atoms[i].order * atoms[j].order <= 64) out.push_back(atoms[i].text + "x" + atoms[j].text);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i; j < k; ++j)
      for (std::size_t l = j; l < k; ++l)
        if (atoms[i].order * atoms[j].order * atoms[l].order <= 64)
          out.push_back(atoms[i].text + "x" + atoms[j].text + "x" + atoms[l].text);
  return out;
}

std::vector<ManifestEntry> read_manifest(std::istream& is) {
  std::vector<ManifestEntry> entries;
  std::string line;
  std::size_t number = 0;
  while (std::getline(is, line)) {
    ++number;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto last = line.find_last_not_of(" \t\r");
    auto text = line.substr(first, last - first + 1);
    try {
      entries.push_back({number, text, parse_spec(text)});
    } catch (const ParseError& e) {
      throw Error(e.code(), "line " + std::to_string(number) + ": " + e.what());
    }
  }
  return entries;
}

void parallel_for(std::size_t count, std::size_t threads, const std::function<void(std::size_t)>& body) {
  threads = std::max<std::size_t>(1, std::min(threads, count));
  if (threads == 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> workers;
  for (std::size_t t = 0; t < threads; ++t)
    workers.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          body(i);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      }
    });
  for (auto& w : workers) w.join();
  if (error) std::rethrow_exception(error);
}

std::vector<CorpusEntry> evaluate_corpus(const std::vector<GroupSpec>& specs, std::size_t threads,
                                         const RealizeOptions& options) {
  std::vector<std::optional<CorpusEntry>> slots(specs.size());
  parallel_for(specs.size(), threads, [&](std::size_t i) {
    Group g = realize(specs[i], options);
    auto c = census(g);
    slots[i] = CorpusEntry{g.label(), std::move(g), std::move(c)};
  });
  std::vector<CorpusEntry> out;
  out.reserve(slots.size());
  for (auto& s : slots) out.push_back(std::move(*s));
  std::stable_sort(out.begin(), out.end(), [](const CorpusEntry& a, const CorpusEntry& b) {
    if (a.group.order() != b.group.order()) return a.group.order() < b.group.order();
    return a.label < b.label;
  });
  return out;
}

}  // namespace cycgrp
