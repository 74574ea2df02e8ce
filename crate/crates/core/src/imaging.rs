//! Row-wise polyalphabetic substitution of 8-bit grayscale images with a
//! dynamical S-box family, plus histograms and binary PGM I/O.
//!
//! This is a demonstration of dynamical S-boxes, not an encryption scheme.

use std::io::Write;
use std::path::Path;

use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::sbox::{invert, SBox, SBoxFamily};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrayImage {
    width: usize,
    height: usize,
    pixels: Vec<u8>,
}

impl GrayImage {
    pub fn new(width: usize, height: usize, pixels: Vec<u8>) -> Result<Self> {
        if pixels.len() != width * height {
            return Err(Error::Format(format!(
                "{width}x{height} image needs {} pixels, got {}",
                width * height,
                pixels.len()
            )));
        }
        Ok(GrayImage { width, height, pixels })
    }

    pub fn filled(width: usize, height: usize, value: u8) -> Self {
        GrayImage { width, height, pixels: vec![value; width * height] }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn pixels(&self) -> &[u8] {
        &self.pixels
    }

    pub fn row(&self, r: usize) -> &[u8] {
        &self.pixels[r * self.width..(r + 1) * self.width]
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Histogram {
    pub bins: [u64; 256],
}

impl Histogram {
    pub fn total(&self) -> u64 {
        self.bins.iter().sum()
    }

    /// Pearson statistic against the uniform distribution over 256 levels.
    pub fn chi_square(&self) -> f64 {
        let expected = self.total() as f64 / 256.0;
        if expected == 0.0 {
            return 0.0;
        }
        self.bins
            .iter()
            .map(|&o| {
                let d = o as f64 - expected;
                d * d / expected
            })
            .sum()
    }

    /// `value,count` lines under a header.
    pub fn to_csv(&self) -> String {
        let mut s = String::from("value,count\n");
        for (v, c) in self.bins.iter().enumerate() {
            s += &format!("{v},{c}\n");
        }
        s
    }
}

pub fn histogram(image: &GrayImage) -> Histogram {
    let mut bins = [0u64; 256];
    for &p in &image.pixels {
        bins[p as usize] += 1;
    }
    Histogram { bins }
}

fn check_family(image: &GrayImage, members: &[SBox]) -> Result<()> {
    if members.len() < image.height {
        return Err(Error::FamilyTooSmall { available: members.len(), needed: image.height });
    }
    if let Some(s) = members.iter().find(|s| s.bits() != 8) {
        return Err(Error::InvalidParameter(format!(
            "image substitution needs 8-bit S-boxes, found {}-bit",
            s.bits()
        )));
    }
    Ok(())
}

fn apply_rows(image: &GrayImage, members: &[SBox], exec: Exec) -> GrayImage {
    let mut out = image.pixels.clone();
    if image.width > 0 {
        exec.for_each_row(&mut out, image.width, |r, row| {
            let table = members[r].table();
            for p in row.iter_mut() {
                *p = table[*p as usize] as u8;
            }
        });
    }
    GrayImage { width: image.width, height: image.height, pixels: out }
}

/// Pixel `(r, c)` becomes `members[r][pixel]`.
pub fn substitute(image: &GrayImage, family: &SBoxFamily) -> Result<GrayImage> {
    substitute_with(image, &family.members, Exec::default())
}

pub fn substitute_with(image: &GrayImage, members: &[SBox], exec: Exec) -> Result<GrayImage> {
    check_family(image, members)?;
    Ok(apply_rows(image, members, exec))
}

/// Undoes [`substitute`] with the inverse of each row's S-box.
pub fn unsubstitute(image: &GrayImage, family: &SBoxFamily) -> Result<GrayImage> {
    unsubstitute_with(image, &family.members, Exec::default())
}

pub fn unsubstitute_with(image: &GrayImage, members: &[SBox], exec: Exec) -> Result<GrayImage> {
    check_family(image, members)?;
    let inverses = members[..image.height].iter().map(invert).collect::<Result<Vec<_>>>()?;
    Ok(apply_rows(image, &inverses, exec))
}

fn skip_ws_and_comments(data: &[u8], pos: &mut usize) {
    while *pos < data.len() {
        if data[*pos].is_ascii_whitespace() {
            *pos += 1;
        } else if data[*pos] == b'#' {
            while *pos < data.len() && data[*pos] != b'\n' {
                *pos += 1;
            }
        } else {
            break;
        }
    }
}

fn header_number(data: &[u8], pos: &mut usize, what: &str) -> Result<usize> {
    skip_ws_and_comments(data, pos);
    let start = *pos;
    while *pos < data.len() && data[*pos].is_ascii_digit() {
        *pos += 1;
    }
    std::str::from_utf8(&data[start..*pos])
        .ok()
        .and_then(|s| s.parse().ok())
        .ok_or_else(|| Error::Format(format!("missing or invalid {what} in PGM header")))
}

/// Decodes a binary (P5) PGM with maxval 255.
pub fn decode_pgm(data: &[u8]) -> Result<GrayImage> {
    if data.len() < 2 || &data[..2] != b"P5" {
        return Err(Error::Format("not a binary PGM (missing P5 magic)".into()));
    }
    let mut pos = 2;
    let width = header_number(data, &mut pos, "width")?;
    let height = header_number(data, &mut pos, "height")?;
    let maxval = header_number(data, &mut pos, "maxval")?;
    if maxval != 255 {
        return Err(Error::Format(format!("unsupported maxval {maxval} (only 255)")));
    }
    if pos >= data.len() || !data[pos].is_ascii_whitespace() {
        return Err(Error::Format("missing whitespace after PGM header".into()));
    }
    pos += 1;
    let need = width * height;
    let payload = &data[pos..];
    if payload.len() < need {
        return Err(Error::Format(format!(
            "PGM payload has {} bytes, {width}x{height} needs {need}",
            payload.len()
        )));
    }
    GrayImage::new(width, height, payload[..need].to_vec())
}

pub fn encode_pgm(image: &GrayImage) -> Vec<u8> {
    let mut out = format!("P5\n{} {}\n255\n", image.width, image.height).into_bytes();
    out.extend_from_slice(&image.pixels);
    out
}

pub fn read_pgm(path: impl AsRef<Path>) -> Result<GrayImage> {
    decode_pgm(&std::fs::read(path)?)
}

pub fn write_pgm(image: &GrayImage, path: impl AsRef<Path>) -> Result<()> {
    let mut f = std::fs::File::create(path)?;
    f.write_all(&encode_pgm(image))?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chaos::GeneratorConfig;
    use crate::sbox::generate_family;

    fn identity_family(count: usize) -> SBoxFamily {
        SBoxFamily {
            members: vec![SBox::identity(8).unwrap(); count],
            config: GeneratorConfig::default(),
            offsets: vec![0; count],
            bits_consumed: 0,
        }
    }

    #[test]
    fn constant_image_rows_take_first_entry() {
        let fam = generate_family(&GeneratorConfig::default(), 8, 4).unwrap();
        let out = substitute(&GrayImage::filled(5, 4, 0), &fam).unwrap();
        for r in 0..4 {
            assert!(out.row(r).iter().all(|&p| p as u16 == fam.members[r].table()[0]));
        }
    }

    #[test]
    fn identity_family_is_a_no_op() {
        let img = GrayImage::new(3, 2, vec![1, 2, 3, 250, 251, 252]).unwrap();
        assert_eq!(substitute(&img, &identity_family(2)).unwrap(), img);
    }

    #[test]
    fn family_too_small_and_wrong_width() {
        let img = GrayImage::filled(2, 3, 7);
        assert_eq!(
            substitute(&img, &identity_family(2)).unwrap_err(),
            Error::FamilyTooSmall { available: 2, needed: 3 }
        );
        let small = vec![SBox::identity(4).unwrap(); 3];
        assert!(substitute_with(&img, &small, Exec::Sequential).is_err());
    }

    #[test]
    fn round_trip_all_255() {
        let fam = generate_family(&GeneratorConfig::default(), 8, 16).unwrap();
        let img = GrayImage::filled(16, 16, 255);
        let enc = substitute(&img, &fam).unwrap();
        assert_eq!(unsubstitute(&enc, &fam).unwrap(), img);
    }

    #[test]
    fn histogram_examples() {
        let h = histogram(&GrayImage::filled(4, 4, 0));
        assert_eq!(h.bins[0], 16);
        assert_eq!(h.total(), 16);
        let ramp = GrayImage::new(16, 16, (0..=255).collect()).unwrap();
        let h = histogram(&ramp);
        assert!(h.bins.iter().all(|&b| b == 1));
        assert_eq!(h.chi_square(), 0.0);
        assert!(h.to_csv().starts_with("value,count\n0,1\n"));
    }

    #[test]
    fn pgm_round_trip_and_errors() {
        let img = GrayImage::new(3, 2, vec![0, 10, 20, 30, 40, 255]).unwrap();
        let bytes = encode_pgm(&img);
        assert_eq!(decode_pgm(&bytes).unwrap(), img);
        let commented = b"P5\n# made by hand\n3 2\n# depth\n255\n\x00\x0a\x14\x1e\x28\xff";
        assert_eq!(decode_pgm(commented).unwrap(), img);
        assert!(decode_pgm(b"P2\n1 1\n255\n0").is_err());
        assert!(decode_pgm(b"P5\n2 2\n65535\n").is_err());
        assert!(decode_pgm(b"P5\n2 2\n255\n\x00\x00").is_err());
        assert!(decode_pgm(b"P5\n2").is_err());
    }
}
