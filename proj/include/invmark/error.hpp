#pragma once

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>

namespace invmark {

/// Base of every error raised by the pipeline.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
  public:
    using Error::Error;
};

/// Two images, or an image and its manifest, disagree on size.
class DimensionMismatch : public InvalidArgument {
  public:
    using InvalidArgument::InvalidArgument;
};

class PreconditionViolation : public Error {
  public:
    using Error::Error;
};

/// Two consecutive frames of a stream carry the same lighting kind.
class AlternationViolation : public Error {
  public:
    explicit AlternationViolation(std::int64_t seq)
        : Error("alternation violation at seq " + std::to_string(seq)), seq_(seq) {}
    AlternationViolation(std::int64_t seq, const std::string& what) : Error(what), seq_(seq) {}

    std::int64_t seq() const noexcept { return seq_; }

  private:
    std::int64_t seq_;
};

class MissingFile : public Error {
  public:
    explicit MissingFile(std::filesystem::path path)
        : Error("missing file: " + path.string()), path_(std::move(path)) {}

    const std::filesystem::path& path() const noexcept { return path_; }

  private:
    std::filesystem::path path_;
};

/// A file exists but could not be decoded or written.
class IoError : public Error {
  public:
    using Error::Error;
};

class ManifestError : public Error {
  public:
    using Error::Error;
};

class InsufficientData : public Error {
  public:
    using Error::Error;
};

class DegenerateInput : public Error {
  public:
    using Error::Error;
};

/// Robust estimation found fewer inliers than required.
class AlignmentFailed : public Error {
  public:
    AlignmentFailed(std::size_t inliers, std::size_t required)
        : Error("alignment failed: " + std::to_string(inliers) + " inliers, " +
                std::to_string(required) + " required"),
          inliers_(inliers) {}

    std::size_t inliers() const noexcept { return inliers_; }

  private:
    std::size_t inliers_;
};

} // namespace invmark
