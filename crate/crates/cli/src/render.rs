//! Staircase-diagram rendering for two-variable monomial ideals.
//!
//! Each ideal is drawn as the region `∪ (g + R₊²)` on a lattice
//! raster; overlaid layers use one glyph per layer in place of the
//! gray shades of the printed figures.

use monomial_residues::{Error, MonomialIdeal, Result};

/// Glyphs assigned to successive layers.
pub const LAYER_GLYPHS: [char; 3] = ['.', ':', '#'];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PictureFormat {
    Ascii,
    Svg,
}

/// A rendered overlay of staircase regions.
#[derive(Debug, Clone)]
pub struct StaircasePicture {
    pub labels: Vec<String>,
    pub width: i64,
    pub height: i64,
    pub body: String,
    pub format: PictureFormat,
}

fn region_cell(ideal: &MonomialIdeal, x: i64, y: i64) -> bool {
    let e = monomial_residues::Exponent::new(vec![x, y]).unwrap();
    ideal.contains(&e).unwrap()
}

/// Render labeled ideals as nested staircases; layers are drawn in the
/// given order and later layers overwrite earlier glyphs.
pub fn render_staircase(
    layers: &[(String, MonomialIdeal)],
    format: PictureFormat,
) -> Result<StaircasePicture> {
    if layers.is_empty() {
        return Err(Error::EmptyGenerators);
    }
    for (_, ideal) in layers {
        if ideal.dimension() != 2 {
            return Err(Error::DimensionMismatch {
                expected: 2,
                got: ideal.dimension(),
            });
        }
    }
    let max_coord = layers
        .iter()
        .flat_map(|(_, i)| i.generators())
        .flat_map(|g| g.coords())
        .copied()
        .max()
        .unwrap_or(0);
    let width = max_coord + 3;
    let height = max_coord + 3;

    // raster per layer, then check that ideal containment is mirrored
    // by cell containment before emitting anything
    let rasters: Vec<Vec<Vec<bool>>> = layers
        .iter()
        .map(|(_, ideal)| {
            (0..height)
                .map(|y| (0..width).map(|x| region_cell(ideal, x, y)).collect())
                .collect()
        })
        .collect();
    for (i, (_, a)) in layers.iter().enumerate() {
        for (j, (_, b)) in layers.iter().enumerate() {
            if i == j || !a.is_subideal_of(b)? {
                continue;
            }
            for (row_i, row_j) in rasters[i].iter().zip(&rasters[j]) {
                for (&cell_i, &cell_j) in row_i.iter().zip(row_j) {
                    assert!(
                        !cell_i || cell_j,
                        "staircase raster must respect ideal nesting"
                    );
                }
            }
        }
    }

    let body = match format {
        PictureFormat::Ascii => ascii_body(layers, &rasters, width, height),
        PictureFormat::Svg => svg_body(layers, &rasters, width, height),
    };
    Ok(StaircasePicture {
        labels: layers.iter().map(|(l, _)| l.clone()).collect(),
        width,
        height,
        body,
        format,
    })
}

fn ascii_body(
    layers: &[(String, MonomialIdeal)],
    rasters: &[Vec<Vec<bool>>],
    width: i64,
    height: i64,
) -> String {
    let mut out = String::new();
    for y in (0..height).rev() {
        for x in 0..width {
            let mut glyph = ' ';
            for (layer, raster) in rasters.iter().enumerate() {
                if raster[y as usize][x as usize] {
                    glyph = LAYER_GLYPHS[layer % LAYER_GLYPHS.len()];
                }
            }
            out.push(glyph);
        }
        out.push('\n');
    }
    for (i, (label, _)) in layers.iter().enumerate() {
        out.push_str(&format!(
            "{} = {}\n",
            LAYER_GLYPHS[i % LAYER_GLYPHS.len()],
            label
        ));
    }
    out
}

const CELL: i64 = 20;
const SVG_SHADES: [&str; 3] = ["#d9d9d9", "#969696", "#404040"];

fn svg_body(
    layers: &[(String, MonomialIdeal)],
    rasters: &[Vec<Vec<bool>>],
    width: i64,
    height: i64,
) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{}\" height=\"{}\">\n",
        width * CELL,
        height * CELL
    ));
    for (layer, raster) in rasters.iter().enumerate() {
        let shade = SVG_SHADES[layer % SVG_SHADES.len()];
        for y in 0..height {
            for x in 0..width {
                if raster[y as usize][x as usize] {
                    out.push_str(&format!(
                        "  <rect x=\"{}\" y=\"{}\" width=\"{CELL}\" height=\"{CELL}\" fill=\"{shade}\"/>\n",
                        x * CELL,
                        (height - 1 - y) * CELL
                    ));
                }
            }
        }
    }
    for (i, (label, _)) in layers.iter().enumerate() {
        out.push_str(&format!(
            "  <!-- layer {}: {} -->\n",
            SVG_SHADES[i % SVG_SHADES.len()],
            label
        ));
    }
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use monomial_residues::Exponent;

    fn ideal(gens: &[[i64; 2]]) -> MonomialIdeal {
        let exps: Vec<Exponent> = gens
            .iter()
            .map(|c| Exponent::new(c.to_vec()).unwrap())
            .collect();
        MonomialIdeal::minimalize(2, &exps).unwrap()
    }

    #[test]
    fn unit_corner() {
        let pic = render_staircase(
            &[("I".to_string(), ideal(&[[1, 0], [0, 1]]))],
            PictureFormat::Ascii,
        )
        .unwrap();
        let rows: Vec<&str> = pic.body.lines().collect();
        // bottom row: only the origin cell is outside the ideal
        let bottom = rows[pic.height as usize - 1];
        assert!(bottom.starts_with(' '));
        assert!(bottom[1..].chars().all(|c| c == '.'));
    }

    #[test]
    fn nested_layers_render() {
        let outer = ideal(&[[2, 0], [0, 2]]);
        let inner = ideal(&[[4, 0], [2, 2], [0, 4]]);
        let pic = render_staircase(
            &[("outer".into(), outer), ("inner".into(), inner)],
            PictureFormat::Ascii,
        )
        .unwrap();
        assert!(pic.body.contains(':'));
        assert!(pic.body.contains('.'));
    }

    #[test]
    fn rejects_other_dimensions() {
        let exps = vec![Exponent::new(vec![1, 0, 0]).unwrap()];
        let i = MonomialIdeal::minimalize(3, &exps).unwrap();
        assert!(render_staircase(&[("I".into(), i)], PictureFormat::Ascii).is_err());
    }

    #[test]
    fn svg_contains_rects() {
        let pic = render_staircase(
            &[("I".into(), ideal(&[[1, 1]]))],
            PictureFormat::Svg,
        )
        .unwrap();
        assert!(pic.body.starts_with("<svg"));
        assert!(pic.body.contains("<rect"));
    }
}
