//! Canonical lead-sheet data model shared by all codecs, generators, and tools.
//!
//! A [`LeadSheet`] is a metadata header plus per-track timed events on a
//! sixteenth-note grid. All types are immutable values; the operations in
//! this module are pure functions.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// Number of grid slots a sixteenth note occupies (the grid unit itself).
pub const SLOTS_PER_QUARTER: u8 = 4;
/// Maximum event duration in grid slots (4 bars of 4/4).
pub const MAX_DURATION_SLOTS: u8 = 64;
/// Inclusive MIDI pitch range for the Drums track (General-MIDI percussion).
pub const DRUM_PITCH_RANGE: (u8, u8) = (35, 81);
/// Inclusive tempo range in BPM.
pub const TEMPO_RANGE: (u16, u16) = (40, 240);

/// Track kinds in canonical serialization order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TrackKind {
    Chord,
    Vocal,
    Bass,
    Piano,
    Guitar,
    Drums,
}

impl TrackKind {
    pub const ALL: [TrackKind; 6] = [
        TrackKind::Chord,
        TrackKind::Vocal,
        TrackKind::Bass,
        TrackKind::Piano,
        TrackKind::Guitar,
        TrackKind::Drums,
    ];

    /// Rank in the fixed per-bar interleaving order.
    pub fn rank(self) -> u8 {
        self as u8
    }

    pub fn name(self) -> &'static str {
        match self {
            TrackKind::Chord => "Chord",
            TrackKind::Vocal => "Vocal",
            TrackKind::Bass => "Bass",
            TrackKind::Piano => "Piano",
            TrackKind::Guitar => "Guitar",
            TrackKind::Drums => "Drums",
        }
    }
}

impl fmt::Display for TrackKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TrackKind {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        TrackKind::ALL
            .iter()
            .copied()
            .find(|k| k.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown track kind `{s}`"))
    }
}

/// Section labels, closed set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SectionLabel {
    Intro,
    Verse,
    PreChorus,
    Chorus,
    Bridge,
    Inst,
    Outro,
}

impl SectionLabel {
    pub const ALL: [SectionLabel; 7] = [
        SectionLabel::Intro,
        SectionLabel::Verse,
        SectionLabel::PreChorus,
        SectionLabel::Chorus,
        SectionLabel::Bridge,
        SectionLabel::Inst,
        SectionLabel::Outro,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SectionLabel::Intro => "intro",
            SectionLabel::Verse => "verse",
            SectionLabel::PreChorus => "pre-chorus",
            SectionLabel::Chorus => "chorus",
            SectionLabel::Bridge => "bridge",
            SectionLabel::Inst => "inst",
            SectionLabel::Outro => "outro",
        }
    }
}

impl fmt::Display for SectionLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SectionLabel {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        SectionLabel::ALL
            .iter()
            .copied()
            .find(|l| l.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown section label `{s}`"))
    }
}

/// Key mode.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Mode {
    Major,
    Minor,
}

impl Mode {
    pub fn name(self) -> &'static str {
        match self {
            Mode::Major => "major",
            Mode::Minor => "minor",
        }
    }

    /// Diatonic pitch classes relative to the tonic.
    pub fn scale_degrees(self) -> [u8; 7] {
        match self {
            Mode::Major => [0, 2, 4, 5, 7, 9, 11],
            Mode::Minor => [0, 2, 3, 5, 7, 8, 10],
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Mode {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "major" => Ok(Mode::Major),
            "minor" => Ok(Mode::Minor),
            _ => Err(format!("unknown mode `{s}`")),
        }
    }
}

/// Chord qualities, closed 8-element set in canonical order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ChordQuality {
    Maj,
    Min,
    Dim,
    Aug,
    Dom7,
    Maj7,
    Min7,
    Sus4,
}

impl ChordQuality {
    pub const ALL: [ChordQuality; 8] = [
        ChordQuality::Maj,
        ChordQuality::Min,
        ChordQuality::Dim,
        ChordQuality::Aug,
        ChordQuality::Dom7,
        ChordQuality::Maj7,
        ChordQuality::Min7,
        ChordQuality::Sus4,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ChordQuality::Maj => "maj",
            ChordQuality::Min => "min",
            ChordQuality::Dim => "dim",
            ChordQuality::Aug => "aug",
            ChordQuality::Dom7 => "dom7",
            ChordQuality::Maj7 => "maj7",
            ChordQuality::Min7 => "min7",
            ChordQuality::Sus4 => "sus4",
        }
    }

    /// Chord tones as pitch-class offsets from the root.
    pub fn tones(self) -> &'static [u8] {
        match self {
            ChordQuality::Maj => &[0, 4, 7],
            ChordQuality::Min => &[0, 3, 7],
            ChordQuality::Dim => &[0, 3, 6],
            ChordQuality::Aug => &[0, 4, 8],
            ChordQuality::Dom7 => &[0, 4, 7, 10],
            ChordQuality::Maj7 => &[0, 4, 7, 11],
            ChordQuality::Min7 => &[0, 3, 7, 10],
            ChordQuality::Sus4 => &[0, 5, 7],
        }
    }
}

impl fmt::Display for ChordQuality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ChordQuality {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        ChordQuality::ALL
            .iter()
            .copied()
            .find(|q| q.name() == s)
            .ok_or_else(|| format!("unknown chord quality `{s}`"))
    }
}

/// A position on the bar/slot grid. Total order is (bar, slot) lexicographic.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GridPosition {
    pub bar: u32,
    pub slot: u8,
}

impl GridPosition {
    pub fn new(bar: u32, slot: u8) -> Self {
        GridPosition { bar, slot }
    }

    /// Absolute slot index from the start of the sheet.
    pub fn abs_slot(&self, slots_per_bar: u8) -> u64 {
        self.bar as u64 * slots_per_bar as u64 + self.slot as u64
    }
}

/// A pitched note with optional aligned phonemes (Vocal track only).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NoteEvent {
    pub pitch: u8,
    pub onset: GridPosition,
    pub duration: u8,
    pub phonemes: Vec<String>,
}

impl NoteEvent {
    pub fn new(pitch: u8, onset: GridPosition, duration: u8) -> Self {
        NoteEvent {
            pitch,
            onset,
            duration,
            phonemes: Vec::new(),
        }
    }

    pub fn with_phonemes(mut self, phonemes: Vec<String>) -> Self {
        self.phonemes = phonemes;
        self
    }
}

impl PartialOrd for NoteEvent {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for NoteEvent {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.onset, self.pitch, self.duration, &self.phonemes).cmp(&(
            other.onset,
            other.pitch,
            other.duration,
            &other.phonemes,
        ))
    }
}

/// A chord symbol with a root pitch class and one of eight qualities.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ChordEvent {
    pub root: u8,
    pub quality: ChordQuality,
    pub onset: GridPosition,
    pub duration: u8,
}

impl ChordEvent {
    pub fn new(root: u8, quality: ChordQuality, onset: GridPosition, duration: u8) -> Self {
        ChordEvent {
            root,
            quality,
            onset,
            duration,
        }
    }
}

impl PartialOrd for ChordEvent {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ChordEvent {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.onset, self.root, self.quality, self.duration).cmp(&(
            other.onset,
            other.root,
            other.quality,
            other.duration,
        ))
    }
}

/// Event list of one track. The Chord track holds chords, all others notes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TrackEvents {
    Notes(Vec<NoteEvent>),
    Chords(Vec<ChordEvent>),
}

impl TrackEvents {
    pub fn len(&self) -> usize {
        match self {
            TrackEvents::Notes(v) => v.len(),
            TrackEvents::Chords(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn as_notes(&self) -> Option<&[NoteEvent]> {
        match self {
            TrackEvents::Notes(v) => Some(v),
            TrackEvents::Chords(_) => None,
        }
    }

    pub fn as_chords(&self) -> Option<&[ChordEvent]> {
        match self {
            TrackEvents::Chords(v) => Some(v),
            TrackEvents::Notes(_) => None,
        }
    }
}

/// Sheet-level header: tempo, meter, key, and the section plan.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeadSheetMeta {
    pub tempo_bpm: u16,
    /// (numerator, denominator); denominator in {2, 4, 8}.
    pub time_sig: (u8, u8),
    /// (tonic pitch class 0-11, mode).
    pub key: (u8, Mode),
    /// Ordered (label, start_bar) pairs; strictly increasing, first at bar 0.
    pub sections: Vec<(SectionLabel, u32)>,
}

impl Default for LeadSheetMeta {
    fn default() -> Self {
        LeadSheetMeta {
            tempo_bpm: 122,
            time_sig: (4, 4),
            key: (0, Mode::Major),
            sections: vec![(SectionLabel::Verse, 0)],
        }
    }
}

/// Grid slots per bar for a time signature: one slot per sixteenth note.
pub fn slots_per_bar_for(time_sig: (u8, u8)) -> u8 {
    let (num, den) = time_sig;
    (num as u16 * 16 / den as u16) as u8
}

/// The canonical symbolic score: header plus per-track timed events.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeadSheet {
    pub meta: LeadSheetMeta,
    pub slots_per_bar: u8,
    pub n_bars: u32,
    pub tracks: BTreeMap<TrackKind, TrackEvents>,
}

impl LeadSheet {
    /// Empty one-bar sheet for the given header.
    pub fn new(meta: LeadSheetMeta) -> Self {
        let slots_per_bar = slots_per_bar_for(meta.time_sig);
        LeadSheet {
            meta,
            slots_per_bar,
            n_bars: 1,
            tracks: BTreeMap::new(),
        }
    }

    pub fn notes(&self, kind: TrackKind) -> Option<&[NoteEvent]> {
        self.tracks.get(&kind).and_then(|t| t.as_notes())
    }

    pub fn chords(&self) -> Option<&[ChordEvent]> {
        self.tracks.get(&TrackKind::Chord).and_then(|t| t.as_chords())
    }

    pub fn set_notes(&mut self, kind: TrackKind, events: Vec<NoteEvent>) {
        assert_ne!(kind, TrackKind::Chord, "Chord track holds ChordEvent");
        self.tracks.insert(kind, TrackEvents::Notes(events));
    }

    pub fn set_chords(&mut self, events: Vec<ChordEvent>) {
        self.tracks.insert(TrackKind::Chord, TrackEvents::Chords(events));
    }

    /// Total event count across tracks.
    pub fn event_count(&self) -> usize {
        self.tracks.values().map(|t| t.len()).sum()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NormalizeError {
    #[error("invalid pitch {pitch} in {kind} event {index}")]
    InvalidPitch {
        kind: TrackKind,
        index: usize,
        pitch: u8,
    },
    #[error("invalid slot {slot} in {kind} event {index} (slots per bar {slots_per_bar})")]
    InvalidSlot {
        kind: TrackKind,
        index: usize,
        slot: u8,
        slots_per_bar: u8,
    },
}

/// Canonicalize a sheet: sort events, merge duplicates, recompute `n_bars`,
/// clamp durations, drop empty tracks. Idempotent; errors on out-of-range
/// pitches or slots.
pub fn normalize(ls: &LeadSheet) -> Result<LeadSheet, NormalizeError> {
    let slots_per_bar = slots_per_bar_for(ls.meta.time_sig);
    let mut out = LeadSheet {
        meta: ls.meta.clone(),
        slots_per_bar,
        n_bars: 1,
        tracks: BTreeMap::new(),
    };

    let mut max_bar = 0u32;
    for (&kind, events) in &ls.tracks {
        match events {
            TrackEvents::Notes(notes) => {
                let mut cleaned = Vec::with_capacity(notes.len());
                for (index, ev) in notes.iter().enumerate() {
                    if ev.pitch > 127 {
                        return Err(NormalizeError::InvalidPitch {
                            kind,
                            index,
                            pitch: ev.pitch,
                        });
                    }
                    if kind == TrackKind::Drums
                        && !(DRUM_PITCH_RANGE.0..=DRUM_PITCH_RANGE.1).contains(&ev.pitch)
                    {
                        return Err(NormalizeError::InvalidPitch {
                            kind,
                            index,
                            pitch: ev.pitch,
                        });
                    }
                    if ev.onset.slot >= slots_per_bar {
                        return Err(NormalizeError::InvalidSlot {
                            kind,
                            index,
                            slot: ev.onset.slot,
                            slots_per_bar,
                        });
                    }
                    let mut ev = ev.clone();
                    ev.duration = ev.duration.clamp(1, MAX_DURATION_SLOTS);
                    if kind != TrackKind::Vocal {
                        ev.phonemes.clear();
                    }
                    cleaned.push(ev);
                }
                cleaned.sort();
                let merged = merge_notes(cleaned);
                if let Some(last) = merged.last() {
                    max_bar = max_bar.max(last.onset.bar);
                }
                if !merged.is_empty() {
                    out.tracks.insert(kind, TrackEvents::Notes(merged));
                }
            }
            TrackEvents::Chords(chords) => {
                let mut cleaned = Vec::with_capacity(chords.len());
                for (index, ev) in chords.iter().enumerate() {
                    if ev.root > 11 {
                        return Err(NormalizeError::InvalidPitch {
                            kind,
                            index,
                            pitch: ev.root,
                        });
                    }
                    if ev.onset.slot >= slots_per_bar {
                        return Err(NormalizeError::InvalidSlot {
                            kind,
                            index,
                            slot: ev.onset.slot,
                            slots_per_bar,
                        });
                    }
                    let mut ev = *ev;
                    ev.duration = ev.duration.clamp(1, MAX_DURATION_SLOTS);
                    cleaned.push(ev);
                }
                cleaned.sort();
                let merged = merge_chords(cleaned);
                if let Some(last) = merged.last() {
                    max_bar = max_bar.max(last.onset.bar);
                }
                if !merged.is_empty() {
                    out.tracks.insert(kind, TrackEvents::Chords(merged));
                }
            }
        }
    }

    // Section canonicalization: sorted, deduped per bar, first pinned to bar 0.
    let mut sections = ls.meta.sections.clone();
    if sections.is_empty() {
        sections.push((SectionLabel::Verse, 0));
    }
    sections.sort_by_key(|&(_, bar)| bar);
    sections.dedup_by_key(|&mut (_, bar)| bar);
    sections[0].1 = 0;
    let max_section_bar = sections.last().map(|&(_, b)| b).unwrap_or(0);
    out.meta.sections = sections;

    out.n_bars = (max_bar + 1)
        .max(max_section_bar + 1)
        .max(1);
    Ok(out)
}

fn merge_notes(sorted: Vec<NoteEvent>) -> Vec<NoteEvent> {
    let mut merged: Vec<NoteEvent> = Vec::with_capacity(sorted.len());
    for ev in sorted {
        if let Some(prev) = merged.last_mut() {
            if prev.onset == ev.onset && prev.pitch == ev.pitch {
                prev.duration = prev.duration.max(ev.duration);
                if prev.phonemes.is_empty() && !ev.phonemes.is_empty() {
                    prev.phonemes = ev.phonemes;
                }
                continue;
            }
        }
        merged.push(ev);
    }
    merged
}

fn merge_chords(sorted: Vec<ChordEvent>) -> Vec<ChordEvent> {
    let mut merged: Vec<ChordEvent> = Vec::with_capacity(sorted.len());
    for ev in sorted {
        if let Some(prev) = merged.last_mut() {
            if prev.onset == ev.onset && prev.root == ev.root {
                prev.duration = prev.duration.max(ev.duration);
                continue;
            }
        }
        merged.push(ev);
    }
    merged
}

/// Keep only the requested track kinds. Meta, grid, and bar count unchanged.
pub fn select_stems(ls: &LeadSheet, kinds: &[TrackKind]) -> LeadSheet {
    let mut out = ls.clone();
    out.tracks.retain(|k, _| kinds.contains(k));
    out
}

/// One event in a [`Diff`], tagged by payload type.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum Event {
    Note(NoteEvent),
    Chord(ChordEvent),
}

impl Event {
    pub fn onset(&self) -> GridPosition {
        match self {
            Event::Note(n) => n.onset,
            Event::Chord(c) => c.onset,
        }
    }
}

/// Per-track added/removed events.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct TrackDiff {
    pub added: Vec<Event>,
    pub removed: Vec<Event>,
}

/// Structural difference between two sheets.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Diff {
    /// Names of changed header fields (`tempo_bpm`, `time_sig`, `key`,
    /// `sections`, `slots_per_bar`, `n_bars`).
    pub meta_changed: Vec<&'static str>,
    pub tracks: BTreeMap<TrackKind, TrackDiff>,
}

impl Diff {
    pub fn is_empty(&self) -> bool {
        self.meta_changed.is_empty() && self.tracks.is_empty()
    }

    /// Added/removed events whose onset bar lies outside `bars` or whose
    /// track is not in `kinds`. Empty iff the diff is local to the region.
    pub fn outside_region(&self, bars: (u32, u32), kinds: &[TrackKind]) -> Vec<(TrackKind, Event)> {
        let mut out = Vec::new();
        for (&kind, td) in &self.tracks {
            for ev in td.added.iter().chain(td.removed.iter()) {
                let bar = ev.onset().bar;
                if !kinds.contains(&kind) || bar < bars.0 || bar >= bars.1 {
                    out.push((kind, ev.clone()));
                }
            }
        }
        out
    }
}

/// Structural diff of two normalized sheets: set difference per track plus
/// changed header fields. Empty iff the sheets are structurally equal.
pub fn compare(a: &LeadSheet, b: &LeadSheet) -> Diff {
    let mut diff = Diff::default();
    if a.meta.tempo_bpm != b.meta.tempo_bpm {
        diff.meta_changed.push("tempo_bpm");
    }
    if a.meta.time_sig != b.meta.time_sig {
        diff.meta_changed.push("time_sig");
    }
    if a.meta.key != b.meta.key {
        diff.meta_changed.push("key");
    }
    if a.meta.sections != b.meta.sections {
        diff.meta_changed.push("sections");
    }
    if a.slots_per_bar != b.slots_per_bar {
        diff.meta_changed.push("slots_per_bar");
    }
    if a.n_bars != b.n_bars {
        diff.meta_changed.push("n_bars");
    }

    for kind in TrackKind::ALL {
        let ea = a.tracks.get(&kind);
        let eb = b.tracks.get(&kind);
        let (added, removed) = diff_events(ea, eb);
        if !added.is_empty() || !removed.is_empty() {
            diff.tracks.insert(kind, TrackDiff { added, removed });
        }
    }
    diff
}

fn diff_events(a: Option<&TrackEvents>, b: Option<&TrackEvents>) -> (Vec<Event>, Vec<Event>) {
    use std::collections::BTreeSet;
    let to_set = |t: Option<&TrackEvents>| -> BTreeSet<Event> {
        match t {
            None => BTreeSet::new(),
            Some(TrackEvents::Notes(v)) => v.iter().cloned().map(Event::Note).collect(),
            Some(TrackEvents::Chords(v)) => v.iter().copied().map(Event::Chord).collect(),
        }
    };
    let sa = to_set(a);
    let sb = to_set(b);
    let added = sb.difference(&sa).cloned().collect();
    let removed = sa.difference(&sb).cloned().collect();
    (added, removed)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sheet_with_notes(notes: Vec<NoteEvent>) -> LeadSheet {
        let mut ls = LeadSheet::new(LeadSheetMeta::default());
        ls.set_notes(TrackKind::Vocal, notes);
        ls
    }

    #[test]
    fn slots_per_bar_scaling() {
        assert_eq!(slots_per_bar_for((4, 4)), 16);
        assert_eq!(slots_per_bar_for((3, 4)), 12);
        assert_eq!(slots_per_bar_for((2, 4)), 8);
        assert_eq!(slots_per_bar_for((6, 8)), 12);
        assert_eq!(slots_per_bar_for((3, 8)), 6);
        assert_eq!(slots_per_bar_for((2, 2)), 16);
    }

    #[test]
    fn normalize_is_identity_on_canonical() {
        let ls = sheet_with_notes(vec![
            NoteEvent::new(60, GridPosition::new(0, 0), 4),
            NoteEvent::new(64, GridPosition::new(0, 4), 4),
        ]);
        let n1 = normalize(&ls).unwrap();
        let n2 = normalize(&n1).unwrap();
        assert_eq!(n1, n2);
        assert_eq!(n1.notes(TrackKind::Vocal).unwrap().len(), 2);
    }

    #[test]
    fn normalize_merges_duplicates_keeping_max_duration() {
        let ls = sheet_with_notes(vec![
            NoteEvent::new(60, GridPosition::new(0, 0), 2),
            NoteEvent::new(60, GridPosition::new(0, 0), 4),
        ]);
        let n = normalize(&ls).unwrap();
        let notes = n.notes(TrackKind::Vocal).unwrap();
        assert_eq!(notes.len(), 1);
        assert_eq!(notes[0].duration, 4);
    }

    #[test]
    fn normalize_sorts_matches_sort_oracle() {
        let shuffled = vec![
            NoteEvent::new(64, GridPosition::new(1, 8), 2),
            NoteEvent::new(60, GridPosition::new(0, 4), 2),
            NoteEvent::new(67, GridPosition::new(0, 4), 2),
            NoteEvent::new(55, GridPosition::new(1, 0), 2),
        ];
        let mut oracle = shuffled.clone();
        oracle.sort_by_key(|e| (e.onset, e.pitch));
        let n = normalize(&sheet_with_notes(shuffled)).unwrap();
        assert_eq!(n.notes(TrackKind::Vocal).unwrap(), &oracle[..]);
    }

    #[test]
    fn normalize_rejects_bad_pitch_and_slot() {
        let ls = sheet_with_notes(vec![NoteEvent::new(200, GridPosition::new(0, 0), 4)]);
        assert!(matches!(
            normalize(&ls),
            Err(NormalizeError::InvalidPitch { index: 0, .. })
        ));
        let ls = sheet_with_notes(vec![NoteEvent::new(60, GridPosition::new(0, 16), 4)]);
        assert!(matches!(
            normalize(&ls),
            Err(NormalizeError::InvalidSlot { index: 0, .. })
        ));
    }

    #[test]
    fn normalize_enforces_drum_range() {
        let mut ls = LeadSheet::new(LeadSheetMeta::default());
        ls.set_notes(TrackKind::Drums, vec![NoteEvent::new(30, GridPosition::new(0, 0), 1)]);
        assert!(matches!(
            normalize(&ls),
            Err(NormalizeError::InvalidPitch { kind: TrackKind::Drums, .. })
        ));
    }

    #[test]
    fn normalize_recomputes_bars_and_clamps_duration() {
        let ls = sheet_with_notes(vec![NoteEvent::new(60, GridPosition::new(3, 0), 200)]);
        let n = normalize(&ls).unwrap();
        assert_eq!(n.n_bars, 4);
        assert_eq!(n.notes(TrackKind::Vocal).unwrap()[0].duration, 64);
    }

    #[test]
    fn select_stems_examples() {
        let mut ls = sheet_with_notes(vec![NoteEvent::new(60, GridPosition::new(0, 0), 4)]);
        ls.set_chords(vec![ChordEvent::new(
            0,
            ChordQuality::Maj,
            GridPosition::new(0, 0),
            16,
        )]);
        let ls = normalize(&ls).unwrap();

        let vocal_only = select_stems(&ls, &[TrackKind::Vocal]);
        assert_eq!(vocal_only.tracks.len(), 1);
        assert!(vocal_only.notes(TrackKind::Vocal).is_some());
        assert_eq!(vocal_only.meta, ls.meta);
        assert_eq!(vocal_only.n_bars, ls.n_bars);

        let all = select_stems(&ls, &TrackKind::ALL);
        assert_eq!(all, ls);

        let drums = select_stems(&ls, &[TrackKind::Drums]);
        assert!(drums.tracks.is_empty());
        assert_eq!(drums.n_bars, ls.n_bars);
    }

    #[test]
    fn compare_reflexive_and_transposition() {
        let ls = normalize(&sheet_with_notes(vec![NoteEvent::new(
            60,
            GridPosition::new(0, 0),
            4,
        )]))
        .unwrap();
        assert!(compare(&ls, &ls).is_empty());

        let mut b = ls.clone();
        b.set_notes(TrackKind::Vocal, vec![NoteEvent::new(62, GridPosition::new(0, 0), 4)]);
        let d = compare(&ls, &b);
        let td = &d.tracks[&TrackKind::Vocal];
        assert_eq!(td.added.len(), 1);
        assert_eq!(td.removed.len(), 1);
    }
}
