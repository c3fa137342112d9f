//! Writing figure tables to CSV without going through the binary.
use compensating_media::figures::{self, FigureConfig};
use compensating_media::output::Format;

fn main() -> compensating_media::Result<()> {
    let dir = std::env::temp_dir().join("compmedia-figures");
    std::fs::create_dir_all(&dir).map_err(|source| compensating_media::Error::Io { path: dir.clone(), source })?;
    for id in figures::FIGURE_IDS {
        let t = figures::figure(id, &FigureConfig::default())?;
        let path = dir.join(format!("fig{id}.csv"));
        t.write(Format::Csv, Some(&path))?;
        println!("{}: {} rows, columns {:?}", path.display(), t.rows.len(), t.columns);
    }
    Ok(())
}
