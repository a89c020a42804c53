declare module "mnist" {
  interface DigitApi {
    set(from: number, to: number): { input: number[]; output: number[] }[];
  }
  const mnist: Record<number, DigitApi>;
  export default mnist;
}
