"""
IDX file reader and writer.

Layout (big endian)::

    offset  type            value
    0000    32 bit integer  0x00000803 images / 0x00000801 labels
    0004    32 bit integer  dim 0 (item count)
    0008    32 bit integer  dim 1 (rows, images only)
    0012    32 bit integer  dim 2 (columns, images only)
    ....    unsigned byte   payload, row-major

gzip-compressed files are detected from their first two bytes.
"""

from __future__ import annotations

import gzip
import logging
import os
import struct
from dataclasses import dataclass

import numpy as np

from swagnet.data.dataset import NUM_CLASSES, Dataset, DatasetMeta, one_hot_matrix
from swagnet.errors import FormatError

logger = logging.getLogger(__name__)

IMAGE_MAGIC = 0x00000803
LABEL_MAGIC = 0x00000801
_DIMS_FOR_MAGIC = {IMAGE_MAGIC: 3, LABEL_MAGIC: 1}
_GZIP_SIGNATURE = b"\x1f\x8b"


@dataclass(frozen=True)
class IdxHeader:
    magic: int
    dims: tuple[int, ...]

    @property
    def size(self) -> int:
        return 16 if self.magic == IMAGE_MAGIC else 8

    @property
    def payload_bytes(self) -> int:
        return int(np.prod(self.dims, dtype=np.int64))


def _read_bytes(path: str) -> bytes:
    with open(path, "rb") as f:
        raw = f.read()
    if raw[:2] == _GZIP_SIGNATURE:
        try:
            return gzip.decompress(raw)
        except (OSError, EOFError) as e:
            raise FormatError(f"{path}: corrupt gzip stream ({e})") from e
    return raw


def parse_header(raw: bytes, path: str = "<bytes>") -> IdxHeader:
    if len(raw) < 4:
        raise FormatError(f"{path}: truncated header at offset 0 ({len(raw)} bytes)")
    (magic,) = struct.unpack_from(">I", raw, 0)
    if magic not in _DIMS_FOR_MAGIC:
        raise FormatError(f"{path}: bad magic 0x{magic:08x} at offset 0")
    ndim = _DIMS_FOR_MAGIC[magic]
    end = 4 + 4 * ndim
    if len(raw) < end:
        raise FormatError(f"{path}: truncated header, expected {end} bytes but file ends at offset {len(raw)}")
    dims = struct.unpack_from(f">{ndim}I", raw, 4)
    return IdxHeader(magic=magic, dims=tuple(int(d) for d in dims))


def read_idx(path: str) -> tuple[IdxHeader, np.ndarray]:
    """
    Read an IDX file into a uint8 array shaped by its dimensions.

    Raises:
        FileNotFoundError: if ``path`` does not exist
        FormatError: on a bad magic number or a payload size that disagrees with the header
    """
    raw = _read_bytes(path)
    header = parse_header(raw, path)
    available = len(raw) - header.size
    if available != header.payload_bytes:
        kind = "truncated" if available < header.payload_bytes else "oversized"
        raise FormatError(
            f"{path}: {kind} payload, header at offset 0 declares {header.payload_bytes} bytes "
            f"from offset {header.size} but {available} are present"
        )
    data = np.frombuffer(raw, dtype=np.uint8, offset=header.size).reshape(header.dims)
    return header, data


def write_idx(path: str, data: np.ndarray, gzip_compress: bool = False) -> str:
    """
    Write a uint8 array as IDX: 3-D arrays as images, 1-D arrays as labels.

    Returns:
        Path to the written file
    """
    data = np.asarray(data)
    if data.ndim == 3:
        magic = IMAGE_MAGIC
    elif data.ndim == 1:
        magic = LABEL_MAGIC
    else:
        raise FormatError(f"IDX data must be 1-D labels or 3-D images, got shape {data.shape}")
    if data.size and (data.min() < 0 or data.max() > 255):
        raise FormatError("IDX payload values must fit in an unsigned byte")
    payload = struct.pack(f">I{data.ndim}I", magic, *data.shape) + data.astype(np.uint8).tobytes()
    if gzip_compress:
        payload = gzip.compress(payload, mtime=0)
    parent = os.path.dirname(path)
    if parent:
        os.makedirs(parent, exist_ok=True)
    with open(path, "wb") as f:
        f.write(payload)
    return path


def load_mnist(images_path: str, labels_path: str, source: str = "MNIST") -> Dataset:
    """
    Load an MNIST split as a 784 x n input matrix and a 10 x n one-hot target matrix.

    Pixels are scaled by 1/255; each image is flattened row-major.

    Raises:
        FormatError: on bad files, non-image/label magic numbers, count mismatches or labels above 9
    """
    image_header, images = read_idx(images_path)
    label_header, labels = read_idx(labels_path)
    if image_header.magic != IMAGE_MAGIC:
        raise FormatError(f"{images_path}: expected image magic 0x{IMAGE_MAGIC:08x}, got 0x{image_header.magic:08x}")
    if label_header.magic != LABEL_MAGIC:
        raise FormatError(f"{labels_path}: expected label magic 0x{LABEL_MAGIC:08x}, got 0x{label_header.magic:08x}")
    n_images, n_labels = image_header.dims[0], label_header.dims[0]
    if n_images != n_labels:
        raise FormatError(
            f"count mismatch: {images_path} holds {n_images} images (offset 4), "
            f"{labels_path} holds {n_labels} labels (offset 4)"
        )
    if labels.size and labels.max() >= NUM_CLASSES:
        bad = int(np.argmax(labels >= NUM_CLASSES))
        raise FormatError(f"{labels_path}: label {labels[bad]} at offset {label_header.size + bad} is not a digit")

    inputs = images.reshape(n_images, -1).T.astype(np.float64) / 255.0
    dataset = Dataset(
        inputs=np.ascontiguousarray(inputs),
        targets=one_hot_matrix(labels),
        meta=DatasetMeta(source=source),
    )
    logger.info("loaded %d images of %d pixels from %s", n_images, dataset.input_dim, images_path)
    return dataset
