/* tslint:disable */
/* eslint-disable */

export function certifyGraph(n: number, edges: Uint32Array, theorem: string): string;

export function checkBounds(n: number, edges: Uint32Array): string;

export function computeParameter(n: number, edges: Uint32Array, param: string): string;

export function familyGraph(spec: string): string;

export function parseGraph(text: string): string;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly certifyGraph: (a: number, b: number, c: number, d: number, e: number) => [number, number];
    readonly checkBounds: (a: number, b: number, c: number) => [number, number];
    readonly computeParameter: (a: number, b: number, c: number, d: number, e: number) => [number, number];
    readonly familyGraph: (a: number, b: number) => [number, number];
    readonly parseGraph: (a: number, b: number) => [number, number];
    readonly __wbindgen_externrefs: WebAssembly.Table;
    readonly __wbindgen_malloc: (a: number, b: number) => number;
    readonly __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
    readonly __wbindgen_free: (a: number, b: number, c: number) => void;
    readonly __wbindgen_start: () => void;
}

export type SyncInitInput = BufferSource | WebAssembly.Module;

/**
 * Instantiates the given `module`, which can either be bytes or
 * a precompiled `WebAssembly.Module`.
 *
 * @param {{ module: SyncInitInput }} module - Passing `SyncInitInput` directly is deprecated.
 *
 * @returns {InitOutput}
 */
export function initSync(module: { module: SyncInitInput } | SyncInitInput): InitOutput;

/**
 * If `module_or_path` is {RequestInfo} or {URL}, makes a request and
 * for everything else, calls `WebAssembly.instantiate` directly.
 *
 * @param {{ module_or_path: InitInput | Promise<InitInput> }} module_or_path - Passing `InitInput` directly is deprecated.
 *
 * @returns {Promise<InitOutput>}
 */
export default function __wbg_init (module_or_path?: { module_or_path: InitInput | Promise<InitInput> } | InitInput | Promise<InitInput>): Promise<InitOutput>;
