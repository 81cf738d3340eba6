use serde::Serialize;

/// Switches shared by every pipeline stage.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct PipelineConfig {
    /// Verify every stage hypothesis at runtime (triangle conditions,
    /// component conditions, per-class pullback shape). Cheap invariants are
    /// always checked.
    pub check_hypotheses: bool,
}

impl PipelineConfig {
    pub fn checked() -> Self {
        PipelineConfig {
            check_hypotheses: true,
        }
    }
}

/// Per-stage call counts and the largest color count each stage produced.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct StageStats {
    pub interval_calls: usize,
    pub interval_max_colors: usize,
    pub untangle_calls: usize,
    pub untangle_max_colors: usize,
    pub triangle_free_calls: usize,
    pub triangle_free_max_colors: usize,
    pub recursion_frames: usize,
    pub max_depth: usize,
}

impl StageStats {
    pub fn merge(&mut self, other: &StageStats) {
        self.interval_calls += other.interval_calls;
        self.interval_max_colors = self.interval_max_colors.max(other.interval_max_colors);
        self.untangle_calls += other.untangle_calls;
        self.untangle_max_colors = self.untangle_max_colors.max(other.untangle_max_colors);
        self.triangle_free_calls += other.triangle_free_calls;
        self.triangle_free_max_colors =
            self.triangle_free_max_colors.max(other.triangle_free_max_colors);
        self.recursion_frames += other.recursion_frames;
        self.max_depth = self.max_depth.max(other.max_depth);
    }
}

/// Configuration plus the statistics accumulated while running.
#[derive(Debug, Clone, Default)]
pub struct Context {
    pub config: PipelineConfig,
    pub stats: StageStats,
}

impl Context {
    pub fn new(config: PipelineConfig) -> Self {
        Context {
            config,
            stats: StageStats::default(),
        }
    }

    pub fn checked() -> Self {
        Context::new(PipelineConfig::checked())
    }

    pub(crate) fn checking(&self) -> bool {
        self.config.check_hypotheses
    }
}
