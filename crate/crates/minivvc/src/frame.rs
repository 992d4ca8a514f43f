//! Planar frame storage.
//!
//! Samples are stored as `u16` regardless of bit depth so that 8- and
//! 10-bit content share one code path.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum FrameError {
    #[error("sample {value} exceeds {bitdepth}-bit range")]
    SampleRange { value: u16, bitdepth: u8 },
    #[error("plane data length {got} does not match {width}x{height}")]
    DataLength { got: usize, width: usize, height: usize },
    #[error("unsupported bit depth {0} (must be 8 or 10)")]
    BitDepth(u8),
    #[error("4:2:0 requires even luma dimensions, got {width}x{height}")]
    OddDimensions { width: usize, height: usize },
    #[error("chroma plane {got_w}x{got_h} does not match expected {want_w}x{want_h}")]
    ChromaDims { got_w: usize, got_h: usize, want_w: usize, want_h: usize },
    #[error("sequence frames must share dimensions, bit depth and chroma format")]
    MixedSequence,
    #[error("empty sequence")]
    EmptySequence,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub enum ChromaFormat {
    /// Monochrome, no chroma planes.
    C400,
    /// Chroma subsampled by two in both directions.
    C420,
}

/// A single plane of unsigned samples in row-major order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Plane {
    width: usize,
    height: usize,
    bitdepth: u8,
    data: Vec<u16>,
}

impl Plane {
    pub fn new(width: usize, height: usize, bitdepth: u8, data: Vec<u16>) -> Result<Self, FrameError> {
        if bitdepth != 8 && bitdepth != 10 {
            return Err(FrameError::BitDepth(bitdepth));
        }
        if data.len() != width * height {
            return Err(FrameError::DataLength { got: data.len(), width, height });
        }
        let max = (1u16 << bitdepth) - 1;
        if let Some(&v) = data.iter().find(|&&v| v > max) {
            return Err(FrameError::SampleRange { value: v, bitdepth });
        }
        Ok(Plane { width, height, bitdepth, data })
    }

    /// Plane filled with the mid-gray value `2^(bitdepth-1)`.
    pub fn filled(width: usize, height: usize, bitdepth: u8, value: u16) -> Self {
        assert!(value < (1 << bitdepth));
        Plane { width, height, bitdepth, data: vec![value; width * height] }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn bitdepth(&self) -> u8 {
        self.bitdepth
    }

    pub fn max_value(&self) -> u16 {
        (1 << self.bitdepth) - 1
    }

    pub fn data(&self) -> &[u16] {
        &self.data
    }

    pub fn data_mut(&mut self) -> &mut [u16] {
        &mut self.data
    }

    #[inline]
    pub fn get(&self, x: usize, y: usize) -> u16 {
        self.data[y * self.width + x]
    }

    #[inline]
    pub fn set(&mut self, x: usize, y: usize, v: u16) {
        debug_assert!(v <= self.max_value());
        self.data[y * self.width + x] = v;
    }

    /// Sample at clamped coordinates; used for edge-replicated reads.
    #[inline]
    pub fn get_clamped(&self, x: isize, y: isize) -> u16 {
        let cx = x.clamp(0, self.width as isize - 1) as usize;
        let cy = y.clamp(0, self.height as isize - 1) as usize;
        self.data[cy * self.width + cx]
    }

    pub fn row(&self, y: usize) -> &[u16] {
        &self.data[y * self.width..(y + 1) * self.width]
    }

    pub fn is_empty(&self) -> bool {
        self.data.is_empty()
    }
}

/// One picture: a luma plane plus chroma planes per the chroma format.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Frame {
    pub luma: Plane,
    pub chroma_cb: Plane,
    pub chroma_cr: Plane,
    pub chroma_format: ChromaFormat,
}

impl Frame {
    pub fn new(
        luma: Plane,
        chroma_cb: Plane,
        chroma_cr: Plane,
        chroma_format: ChromaFormat,
    ) -> Result<Self, FrameError> {
        match chroma_format {
            ChromaFormat::C400 => {
                if !chroma_cb.is_empty() || !chroma_cr.is_empty() {
                    return Err(FrameError::ChromaDims {
                        got_w: chroma_cb.width(),
                        got_h: chroma_cb.height(),
                        want_w: 0,
                        want_h: 0,
                    });
                }
            }
            ChromaFormat::C420 => {
                if luma.width() % 2 != 0 || luma.height() % 2 != 0 {
                    return Err(FrameError::OddDimensions { width: luma.width(), height: luma.height() });
                }
                let (cw, ch) = (luma.width() / 2, luma.height() / 2);
                for c in [&chroma_cb, &chroma_cr] {
                    if c.width() != cw || c.height() != ch {
                        return Err(FrameError::ChromaDims {
                            got_w: c.width(),
                            got_h: c.height(),
                            want_w: cw,
                            want_h: ch,
                        });
                    }
                }
            }
        }
        Ok(Frame { luma, chroma_cb, chroma_cr, chroma_format })
    }

    /// Gray frame at the given geometry (mid-level samples everywhere).
    pub fn gray(width: usize, height: usize, bitdepth: u8, chroma_format: ChromaFormat) -> Self {
        let mid = 1 << (bitdepth - 1);
        let luma = Plane::filled(width, height, bitdepth, mid);
        let (cb, cr) = match chroma_format {
            ChromaFormat::C400 => (
                Plane::filled(0, 0, bitdepth, 0),
                Plane::filled(0, 0, bitdepth, 0),
            ),
            ChromaFormat::C420 => (
                Plane::filled(width / 2, height / 2, bitdepth, mid),
                Plane::filled(width / 2, height / 2, bitdepth, mid),
            ),
        };
        Frame { luma, chroma_cb: cb, chroma_cr: cr, chroma_format }
    }

    pub fn width(&self) -> usize {
        self.luma.width()
    }

    pub fn height(&self) -> usize {
        self.luma.height()
    }

    pub fn bitdepth(&self) -> u8 {
        self.luma.bitdepth()
    }

    pub fn planes(&self) -> [&Plane; 3] {
        [&self.luma, &self.chroma_cb, &self.chroma_cr]
    }
}

/// Frame rate as an exact ratio, e.g. 30000/1001.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FrameRate {
    pub num: u32,
    pub den: u32,
}

impl FrameRate {
    pub fn new(num: u32, den: u32) -> Self {
        assert!(num > 0 && den > 0);
        FrameRate { num, den }
    }

    pub fn as_f64(&self) -> f64 {
        self.num as f64 / self.den as f64
    }
}

/// An ordered run of frames sharing geometry, depth and chroma format.
#[derive(Debug, Clone, PartialEq)]
pub struct VideoSequence {
    frames: Vec<Frame>,
    framerate: FrameRate,
}

impl VideoSequence {
    pub fn new(frames: Vec<Frame>, framerate: FrameRate) -> Result<Self, FrameError> {
        let first = frames.first().ok_or(FrameError::EmptySequence)?;
        let key = (first.width(), first.height(), first.bitdepth(), first.chroma_format);
        if frames
            .iter()
            .any(|f| (f.width(), f.height(), f.bitdepth(), f.chroma_format) != key)
        {
            return Err(FrameError::MixedSequence);
        }
        Ok(VideoSequence { frames, framerate })
    }

    pub fn frames(&self) -> &[Frame] {
        &self.frames
    }

    pub fn framerate(&self) -> FrameRate {
        self.framerate
    }

    pub fn width(&self) -> usize {
        self.frames[0].width()
    }

    pub fn height(&self) -> usize {
        self.frames[0].height()
    }

    pub fn bitdepth(&self) -> u8 {
        self.frames[0].bitdepth()
    }

    pub fn chroma_format(&self) -> ChromaFormat {
        self.frames[0].chroma_format
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn plane_rejects_out_of_range_samples() {
        assert!(Plane::new(2, 1, 8, vec![255, 256]).is_err());
        assert!(Plane::new(2, 1, 10, vec![1023, 1024]).is_err());
        assert!(Plane::new(2, 1, 10, vec![1023, 0]).is_ok());
    }

    #[test]
    fn plane_rejects_bad_length() {
        assert!(Plane::new(3, 2, 8, vec![0; 5]).is_err());
    }

    #[test]
    fn frame_420_needs_halved_chroma() {
        let y = Plane::filled(4, 4, 8, 0);
        let c = Plane::filled(2, 2, 8, 0);
        assert!(Frame::new(y.clone(), c.clone(), c.clone(), ChromaFormat::C420).is_ok());
        let bad = Plane::filled(4, 4, 8, 0);
        assert!(Frame::new(y, bad.clone(), bad, ChromaFormat::C420).is_err());
    }

    #[test]
    fn frame_400_needs_empty_chroma() {
        let y = Plane::filled(4, 4, 8, 0);
        let empty = Plane::filled(0, 0, 8, 0);
        assert!(Frame::new(y.clone(), empty.clone(), empty, ChromaFormat::C400).is_ok());
        let c = Plane::filled(2, 2, 8, 0);
        assert!(Frame::new(y, c.clone(), c, ChromaFormat::C400).is_err());
    }

    #[test]
    fn sequence_rejects_mixed_frames() {
        let a = Frame::gray(8, 8, 8, ChromaFormat::C420);
        let b = Frame::gray(8, 8, 10, ChromaFormat::C420);
        assert!(VideoSequence::new(vec![a.clone(), b], FrameRate::new(25, 1)).is_err());
        assert!(VideoSequence::new(vec![a.clone(), a], FrameRate::new(25, 1)).is_ok());
    }
}
