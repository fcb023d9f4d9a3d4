#ifndef GLYPHREC_CORPUS_HPP
#define GLYPHREC_CORPUS_HPP

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "glyphrec/image.hpp"

namespace glyphrec {

// One preprocessed, cropped glyph with its metadata.
struct Sample {
    BinaryImage image;
    std::string label;
    std::string style;
    double size_pt = 0.0;
    std::string id;
};

struct ManifestEntry {
    std::string path; // relative to the manifest's directory
    std::string label;
    std::string style;
    double size_pt = 0.0;
    std::string sha256;
};

struct CorpusManifest {
    int version = 1;
    std::vector<std::string> classes;
    std::vector<ManifestEntry> samples;
    std::filesystem::path base_dir; // set on load, not serialized
};

CorpusManifest load_manifest(const std::filesystem::path& path);
void save_manifest(const CorpusManifest& manifest, const std::filesystem::path& path);

struct LoadOptions {
    bool lenient = false; // skip failing samples with a warning instead of failing
};

struct LoadResult {
    std::vector<Sample> samples;
    std::vector<std::string> warnings; // populated in lenient mode
};

// Loads every manifest entry: P5 inputs are median-filtered and Otsu
// binarized, P4 inputs are taken as already binary; both are cropped to the
// glyph bounding box. Holes are left intact.
LoadResult load_corpus(const CorpusManifest& manifest, const LoadOptions& opts = {});
LoadResult load_corpus(const std::filesystem::path& manifest_path,
                       const LoadOptions& opts = {});

struct SplitSpec {
    double train_fraction = 0.5;
    std::uint64_t seed = 0;
    bool stratified = true;
};

struct SplitResult {
    std::vector<std::size_t> train; // indices into the input sample sequence
    std::vector<std::size_t> test;
};

// Deterministic disjoint cover; stratified splits draw ceil(fraction * n)
// training samples per class, so odd remainders land in the training half.
SplitResult split(const std::vector<Sample>& samples, const SplitSpec& spec);

struct SynthOptions {
    std::vector<double> sizes_pt; // each in [8, 100]
    bool noise = false;           // 1% salt-and-pepper followed by a median pass
    std::uint64_t seed = 0;
};

// Nearest-neighbor rescaling of one glyph to each requested point size
// (16 pt maps to a 24 px glyph height). Labels and style are inherited;
// variant ids get a size suffix. Variants that scale to an empty glyph are
// skipped with a warning.
struct SynthResult {
    std::vector<Sample> samples;
    std::vector<std::string> warnings;
};

SynthResult synth_variants(const Sample& seed_glyph, const SynthOptions& opts);

// SHA-256 of a byte string, lowercase hex.
std::string sha256_hex(const std::string& bytes);

} // namespace glyphrec

#endif
