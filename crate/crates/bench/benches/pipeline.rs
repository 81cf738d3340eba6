use std::hint::black_box;

use chordcolor::{
    chromatic_number_exact, color_circle_graph, gen_diagram, GenMode, OracleConfig, PipelineConfig,
};
use chordcolor_bench::k4_free_corpus;
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

fn bench_color(c: &mut Criterion) {
    let mut group = c.benchmark_group("color_circle_graph");
    for n in [10usize, 20, 30, 60] {
        let corpus = k4_free_corpus(n, 16);
        group.bench_with_input(BenchmarkId::new("release", n), &corpus, |b, corpus| {
            b.iter(|| {
                for d in corpus {
                    black_box(color_circle_graph(d, PipelineConfig::default()).unwrap());
                }
            })
        });
        group.bench_with_input(BenchmarkId::new("checked", n), &corpus, |b, corpus| {
            b.iter(|| {
                for d in corpus {
                    black_box(color_circle_graph(d, PipelineConfig::checked()).unwrap());
                }
            })
        });
    }
    group.finish();
}

fn bench_oracle(c: &mut Criterion) {
    let corpus = k4_free_corpus(12, 16);
    let cfg = OracleConfig::default();
    c.bench_function("chromatic_number_exact/12", |b| {
        b.iter(|| {
            for d in &corpus {
                black_box(chromatic_number_exact(&d.graph(), 30, &cfg).unwrap());
            }
        })
    });
}

fn bench_generate(c: &mut Criterion) {
    let mut group = c.benchmark_group("generate");
    for mode in [GenMode::K4Free, GenMode::TriangleFree, GenMode::UntangleShape] {
        group.bench_function(mode.name(), |b| {
            let mut seed = 0;
            b.iter(|| {
                seed += 1;
                black_box(gen_diagram(30, mode, seed).unwrap())
            })
        });
    }
    group.finish();
}

criterion_group!(benches, bench_color, bench_oracle, bench_generate);
criterion_main!(benches);
