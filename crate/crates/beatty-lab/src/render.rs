//! SVG and PGM output for walks.
//!
//! Walk geometry is y-up; screen formats are y-down, so y is negated once at
//! emission time and nowhere else. Both renderers are deterministic: the same
//! walk and options produce byte-identical output.

use crate::error::{Error, Result};
use crate::walk::Walk;

/// Per-side cell limit for rasters, keeping worst-case buffers under ~256 MiB.
pub const MAX_RASTER_SIDE: u64 = 16_384;

struct Frame {
    min_x: i64,
    max_x: i64,
    min_y: i64,
    max_y: i64,
}

fn frame(points: &[(i64, i64)]) -> Frame {
    let mut f = Frame {
        min_x: i64::MAX,
        max_x: i64::MIN,
        min_y: i64::MAX,
        max_y: i64::MIN,
    };
    for &(x, y) in points {
        f.min_x = f.min_x.min(x);
        f.max_x = f.max_x.max(x);
        f.min_y = f.min_y.min(y);
        f.max_y = f.max_y.max(y);
    }
    f
}

/// Renders the walk as a single black polyline on a white background.
pub fn render_svg(walk: &Walk, stroke_width: f64, margin: u32) -> String {
    let f = frame(&walk.points);
    let m = i64::from(margin);
    let x0 = f.min_x - m;
    let y0 = -f.max_y - m;
    let width = (f.max_x - f.min_x) + 2 * m;
    let height = (f.max_y - f.min_y) + 2 * m;

    let mut points = String::new();
    for (i, &(x, y)) in walk.points.iter().enumerate() {
        if i > 0 {
            points.push(' ');
        }
        points.push_str(&format!("{},{}", x, -y));
    }

    format!(
        concat!(
            "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n",
            "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"{x0} {y0} {w} {h}\">\n",
            "<rect x=\"{x0}\" y=\"{y0}\" width=\"{w}\" height=\"{h}\" fill=\"white\"/>\n",
            "<polyline points=\"{pts}\" fill=\"none\" stroke=\"black\" ",
            "stroke-width=\"{sw}\" stroke-linecap=\"square\" stroke-linejoin=\"miter\"/>\n",
            "</svg>\n",
        ),
        x0 = x0,
        y0 = y0,
        w = width,
        h = height,
        pts = points,
        sw = stroke_width,
    )
}

/// Renders the walk as a binary PGM (P5) raster, one cell per lattice point:
/// visited cells are black (0), the rest white (255).
pub fn render_pgm(walk: &Walk, margin: u32) -> Result<Vec<u8>> {
    let f = frame(&walk.points);
    let m = u64::from(margin);
    let width = (f.max_x - f.min_x) as u64 + 1 + 2 * m;
    let height = (f.max_y - f.min_y) as u64 + 1 + 2 * m;
    if width > MAX_RASTER_SIDE || height > MAX_RASTER_SIDE {
        return Err(Error::RasterTooLarge {
            width,
            height,
            max: MAX_RASTER_SIDE,
        });
    }

    let mut cells = vec![255u8; (width * height) as usize];
    for &(x, y) in &walk.points {
        let row = (f.max_y - y) as u64 + m;
        let col = (x - f.min_x) as u64 + m;
        cells[(row * width + col) as usize] = 0;
    }

    let mut out = format!("P5\n{width} {height}\n255\n").into_bytes();
    out.extend_from_slice(&cells);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sequences::BitStream;
    use crate::walk::cloitre_walk;

    fn walk_of(bits: &[u8]) -> Walk {
        cloitre_walk(&BitStream::from_bits(bits.to_vec()).unwrap())
    }

    #[test]
    fn svg_flips_y_and_frames_with_margin() {
        let svg = render_svg(&walk_of(&[0]), 1.0, 2);
        assert!(svg.starts_with("<?xml version=\"1.0\""));
        assert!(svg.contains("viewBox=\"-2 -2 4 5\""), "{svg}");
        assert!(svg.contains("points=\"0,0 0,1\""), "{svg}");
        assert!(svg.contains("stroke-width=\"1\""));
    }

    #[test]
    fn svg_square_walk_lists_all_five_vertices() {
        let svg = render_svg(&walk_of(&[1, 1, 1, 1]), 0.5, 0);
        assert!(svg.contains("points=\"0,0 0,-1 -1,-1 -1,0 0,0\""), "{svg}");
        assert!(svg.contains("viewBox=\"-1 -1 1 1\""), "{svg}");
        assert!(svg.contains("stroke-width=\"0.5\""));
    }

    #[test]
    fn pgm_single_step_no_margin() {
        let pgm = render_pgm(&walk_of(&[0]), 0).unwrap();
        let header = b"P5\n1 2\n255\n";
        assert_eq!(&pgm[..header.len()], header);
        assert_eq!(&pgm[header.len()..], &[0, 0]);
    }

    #[test]
    fn pgm_square_walk_fills_two_by_two() {
        let pgm = render_pgm(&walk_of(&[1, 1, 1, 1]), 0).unwrap();
        let header = b"P5\n2 2\n255\n";
        assert_eq!(&pgm[..header.len()], header);
        assert_eq!(&pgm[header.len()..], &[0, 0, 0, 0]);
    }

    #[test]
    fn pgm_margin_pads_with_white() {
        let pgm = render_pgm(&walk_of(&[0]), 1).unwrap();
        let header = b"P5\n3 4\n255\n";
        assert_eq!(&pgm[..header.len()], header);
        let cells = &pgm[header.len()..];
        assert_eq!(cells.len(), 12);
        assert_eq!(cells.iter().filter(|&&c| c == 0).count(), 2);
        assert_eq!(cells[4], 0);
        assert_eq!(cells[7], 0);
        assert!(cells[..3].iter().all(|&c| c == 255));
    }

    #[test]
    fn pgm_rejects_oversized_rasters() {
        let err = render_pgm(&walk_of(&[0]), 8_192).unwrap_err();
        assert_eq!(
            err,
            Error::RasterTooLarge {
                width: 16_385,
                height: 16_386,
                max: MAX_RASTER_SIDE
            }
        );
    }

    #[test]
    fn renders_are_deterministic() {
        let walk = walk_of(&[1, 0, 0, 1, 1, 0, 1]);
        assert_eq!(render_svg(&walk, 1.0, 2), render_svg(&walk, 1.0, 2));
        assert_eq!(render_pgm(&walk, 2).unwrap(), render_pgm(&walk, 2).unwrap());
    }
}
