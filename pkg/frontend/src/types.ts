/** JSON shapes of the play service, mirrored verbatim. */

export type PlayerName = "resolver" | "spoiler";

export interface GraphView {
  expr: string;
  n: number;
  edges: [number, number][];
  corona: [number, number] | null;
}

export interface Meters {
  unresolvedPairs: number;
  spoilerAlive: boolean;
}

export interface SessionView {
  id: string;
  graph: GraphView;
  layout: [number, number][];
  humanRole: PlayerName;
  firstPlayer: PlayerName;
  engine: string;
  status: "ongoing" | "finished";
  winner: PlayerName | null;
  toMove: PlayerName | null;
  resolver: number[];
  spoiler: number[];
  transcript: [PlayerName, number][];
  meters: Meters;
}

export interface Hint {
  vertex: number;
  tag: string;
}

export interface StrategyInfo {
  name: string;
  role: PlayerName;
}

export interface ApiErrorBody {
  code: string;
  message: string;
}
