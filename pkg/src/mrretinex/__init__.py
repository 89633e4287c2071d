"""Multirate multiscale retinex contrast enhancement and wavelet-energy assessment."""
from .baselines import histogram_equalize, plain_msr_enhance
from .colorspace import hsv_to_rgb, rgb_to_hsv
from .fusion import MergeMode, merge_pair, reconstruct
from .multirate import ScalePyramid, build_pyramid, decimate, expand_zero_insert
from .pipeline import PipelineConfig, RunReport, enhance_image, run_benchmark
from .retinex import EnhanceConfig, contrast_stretch, enhance_level, gaussian_kernel, msr, ssr
from .wavelet import assess, dwt2, idwt2, wavelet_energy

__version__ = "0.1.0"
