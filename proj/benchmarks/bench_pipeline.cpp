// SPDX-License-Identifier: Apache-2.0
//
// Microbenchmarks for the hot paths: line parsing, tokenization, feature
// mapping, scoring, and the end-to-end pipeline at desk scale.

#include <sstream>
#include <string>
#include <vector>

#include <benchmark/benchmark.h>

#include "lognb/classifier.hpp"
#include "lognb/evaluate.hpp"
#include "lognb/features.hpp"
#include "lognb/parser.hpp"
#include "lognb/synth.hpp"
#include "lognb/tokenizer.hpp"

using namespace lognb;

namespace {

const std::string kLineA =
    "20140604 103903.913 Error: ProntoEventServer. PE_Client removed on "
    "Duration 8453ms Timeout 502ms StackSize 90";
const std::string kLineB =
    "06/04 142452.865|02488|error | CAlarmFilter |general |onXmlRead> "
    "xml element \"alarms\" is ignored";

std::string make_corpus(std::uint64_t count, std::uint64_t seed) {
    GeneratorSpec spec;
    spec.count = count;
    spec.seed = seed;
    return generate(spec).first;
}

void BM_parse_line_dialect_a(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(parse_line(kLineA));
    state.SetBytesProcessed(state.iterations() *
                            static_cast<std::int64_t>(kLineA.size()));
}
BENCHMARK(BM_parse_line_dialect_a);

void BM_parse_line_dialect_b(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(parse_line(kLineB));
    state.SetBytesProcessed(state.iterations() *
                            static_cast<std::int64_t>(kLineB.size()));
}
BENCHMARK(BM_parse_line_dialect_b);

void BM_tokenize(benchmark::State& state) {
    TokenizerConfig config;
    for (auto _ : state) benchmark::DoNotOptimize(tokenize(kLineA, config));
    state.SetBytesProcessed(state.iterations() *
                            static_cast<std::int64_t>(kLineA.size()));
}
BENCHMARK(BM_tokenize);

void BM_vectorize_and_classify(benchmark::State& state) {
    const std::size_t p = static_cast<std::size_t>(state.range(0));
    std::string corpus = make_corpus(4000, 1);
    std::istringstream in(corpus);
    TokenizerConfig tok;
    FrequencyCounter counter;
    std::vector<std::pair<TokenBag, ClassLabel>> bags;
    parse_stream(in, [&](LogEvent&& ev) {
        LabeledEvent labeled = label_event(std::move(ev));
        TokenBag bag = tokenize(labeled.event.content, tok);
        counter.add(bag, labeled.label());
        bags.emplace_back(std::move(bag), labeled.label());
    });
    Vocabulary vocab = select_vocabulary(counter.take(), p, 0.5);
    Trainer trainer(vocab, 0.5, tok);
    for (const auto& [bag, label] : bags) trainer.add(vectorize(bag, vocab), label);
    NBModel model = trainer.finish();

    std::size_t i = 0;
    for (auto _ : state) {
        const TokenBag& bag = bags[i++ % bags.size()].first;
        benchmark::DoNotOptimize(classify(model, vectorize(bag, vocab)));
    }
    state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_vectorize_and_classify)->Arg(100)->Arg(500);

void BM_generate_corpus(benchmark::State& state) {
    const std::uint64_t count = static_cast<std::uint64_t>(state.range(0));
    std::uint64_t seed = 1;
    for (auto _ : state) benchmark::DoNotOptimize(make_corpus(count, seed++));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(count));
}
BENCHMARK(BM_generate_corpus)->Arg(10000)->Unit(benchmark::kMillisecond);

void BM_end_to_end_10k(benchmark::State& state) {
    std::string corpus = make_corpus(10000, 3);
    for (auto _ : state) {
        TokenizerConfig tok;
        FrequencyCounter counter;
        {
            std::istringstream in(corpus);
            parse_stream(in, [&](LogEvent&& ev) {
                LabeledEvent labeled = label_event(std::move(ev));
                counter.add(tokenize(labeled.event.content, tok), labeled.label());
            });
        }
        Vocabulary vocab = select_vocabulary(counter.take(), 500, 0.5);
        Trainer trainer(vocab, 0.5, tok);
        ConfusionCounter confusion;
        std::optional<NBModel> model;
        std::size_t index = 0;
        std::istringstream in(corpus);
        parse_stream(in, [&](LogEvent&& ev) {
            LabeledEvent labeled = label_event(std::move(ev));
            FeatureVector fv = vectorize(tokenize(labeled.event.content, tok), vocab);
            if (index++ < 2000) {
                trainer.add(fv, labeled.label());
            } else {
                if (!model) model = trainer.finish();
                confusion.add(classify(*model, fv), labeled.label());
            }
        });
        benchmark::DoNotOptimize(confusion.matrix());
    }
    state.SetItemsProcessed(state.iterations() * 10000);
}
BENCHMARK(BM_end_to_end_10k)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
