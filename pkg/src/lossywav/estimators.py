"""scikit-learn style front ends for the two codecs.

``fit`` validates the hyper-parameters (and, for companding, builds the
lookup tables); ``transform`` encodes a sample sequence and
``inverse_transform`` decodes it. Parameters round-trip through
``get_params``/``set_params`` so the compressors can be cloned and grid
searched like any other transformer.
"""

from __future__ import annotations

from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from . import companding, container, silence
from .bitpack import packed_size
from .errors import InvariantViolation
from .validation import check_codec_format, check_samples
from .wav import WavFile


class SilenceCompressor(TransformerMixin, BaseEstimator):
    """Run-length code near-silent stretches of 8-bit audio.

    Parameters
    ----------
    threshold : int, default=4
        Largest distance from ``silence_center`` still counted as silence.
    start_threshold : int, default=5
        Silent samples needed in a row before a run is encoded.
    stop_threshold : int, default=2
        Consecutive loud samples that end an open run.
    silence_center : int, default=0x80
    silence_code : int, default=0xFF
        Escape byte that introduces a ``(code, count)`` pair.
    """

    codec_id = container.SILENCE

    def __init__(
        self,
        threshold=4,
        start_threshold=5,
        stop_threshold=2,
        silence_center=0x80,
        silence_code=0xFF,
    ):
        self.threshold = threshold
        self.start_threshold = start_threshold
        self.stop_threshold = stop_threshold
        self.silence_center = silence_center
        self.silence_code = silence_code

    def fit(self, X=None, y=None):
        self.params_ = silence.SilenceParams(
            silence_center=self.silence_center,
            threshold=self.threshold,
            silence_code=self.silence_code,
            start_threshold=self.start_threshold,
            stop_threshold=self.stop_threshold,
        )
        return self

    def transform(self, X):
        check_is_fitted(self, "params_")
        return silence.encode_silence(check_samples(X), self.params_)

    def inverse_transform(self, X, n_samples=None):
        check_is_fitted(self, "params_")
        out = silence.decode_silence(bytes(X), self.params_)
        if n_samples is not None and len(out) != n_samples:
            raise InvariantViolation(f"decoded {len(out)} samples, expected {n_samples}")
        return out

    def compressed_params(self):
        check_is_fitted(self, "params_")
        return self.params_


class CompandingCompressor(TransformerMixin, BaseEstimator):
    """Quantize 8-bit audio to ``bits``-wide logarithmic codes.

    The output size is known up front: ``ceil(n * bits / 8)`` bytes for
    ``n`` samples.
    """

    codec_id = container.COMPAND

    def __init__(self, bits=4):
        self.bits = bits

    def fit(self, X=None, y=None):
        self.tables_ = companding.build_tables(self.bits)
        self.max_error_ = companding.max_error(self.tables_)
        return self

    def transform(self, X):
        check_is_fitted(self, "tables_")
        return companding.compand_encode(check_samples(X), self.tables_)

    def inverse_transform(self, X, n_samples=None):
        """Decode packed codes.

        Without ``n_samples`` every whole code in ``X`` is decoded, which can
        yield one extra sample when padding bits happen to fill a code.
        """
        check_is_fitted(self, "tables_")
        if n_samples is None:
            n_samples = len(X) * 8 // self.tables_.bits
        return companding.compand_decode(bytes(X), self.tables_, n_samples)

    def compressed_params(self):
        check_is_fitted(self, "tables_")
        return self.tables_.bits

    def output_size(self, n_samples):
        return packed_size(n_samples, self.bits)


def compress_wav(wav: WavFile, estimator) -> container.CompressedFile:
    """Encode the samples of ``wav`` with a (possibly unfitted) compressor."""
    check_codec_format(wav)
    if not hasattr(estimator, "params_") and not hasattr(estimator, "tables_"):
        estimator.fit()
    payload = estimator.transform(wav.data)
    return container.CompressedFile(
        codec_id=estimator.codec_id,
        params=estimator.compressed_params(),
        original_data_len=len(wav.data),
        source_format=wav.format,
        payload=payload,
    )


def estimator_for(compressed: container.CompressedFile):
    if compressed.codec_id == container.SILENCE:
        p = compressed.params
        return SilenceCompressor(
            threshold=p.threshold,
            start_threshold=p.start_threshold,
            stop_threshold=p.stop_threshold,
            silence_center=p.silence_center,
            silence_code=p.silence_code,
        ).fit()
    return CompandingCompressor(bits=compressed.params).fit()


def decompress_wav(compressed: container.CompressedFile) -> WavFile:
    est = estimator_for(compressed)
    data = est.inverse_transform(compressed.payload, n_samples=compressed.original_data_len)
    return WavFile(compressed.source_format, data)
